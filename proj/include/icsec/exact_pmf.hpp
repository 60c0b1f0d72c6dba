// Exact finite joint distributions over named bit-valued variables.
//
// Probabilities are never stored as floats: every outcome carries an integer
// count over a power-of-two denominator (the schemes audited here draw all
// randomness from uniform bits, so every probability is a dyadic rational).
// Floating point enters only in the final log-domain reduction of entropy.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "icsec/errors.hpp"

namespace icsec {

/// A finite joint pmf. The outcome space is the set of labeled tuples over
/// the declared variables; each variable holds a packed value of up to 64
/// bits. Counts must sum to 2^denominator_bits once fully populated.
class ExactPmf {
  public:
    struct Variable {
        std::string name;
        int bits;  // width of the packed value, 0..64
    };

    using Outcome = std::vector<std::uint64_t>;  // one value per variable

    ExactPmf(std::vector<Variable> variables, int denominator_bits);

    /// Adds count occurrences of the given outcome tuple.
    void add(const Outcome& outcome, std::uint64_t count);

    /// Folds another pmf over the same variables into this one by adding
    /// counts. Used to merge per-worker partial enumerations.
    void merge(const ExactPmf& other);

    const std::vector<Variable>& variables() const { return variables_; }
    int denominator_bits() const { return denominator_bits_; }
    std::uint64_t denominator() const { return std::uint64_t{1} << denominator_bits_; }
    const std::map<Outcome, std::uint64_t>& counts() const { return counts_; }

    /// True once the counts sum to the full denominator.
    bool complete() const;

    /// Marginal distribution over a subset of variables, in the order given.
    /// Throws UnknownVariable for names this pmf does not carry.
    ExactPmf marginal(const std::vector<std::string>& keep) const;

    bool has_variable(const std::string& name) const;

  private:
    std::vector<Variable> variables_;
    int denominator_bits_;
    std::map<Outcome, std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

/// Shannon entropy in bits: H = log2(D) - (1/D) * sum c*log2(c) over nonzero
/// counts c with denominator D. Independent of outcome ordering.
double entropy(const ExactPmf& p);

/// I(A;B) computed as H(A) + H(B) - H(A,B) from marginals of the joint.
/// Groups must be disjoint; unknown names throw UnknownVariable.
double mutual_information(const ExactPmf& joint, const std::vector<std::string>& group_a,
                          const std::vector<std::string>& group_b);

}  // namespace icsec
