#include "icsec/exact_pmf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace icsec {

ExactPmf::ExactPmf(std::vector<Variable> variables, int denominator_bits)
    : variables_(std::move(variables)), denominator_bits_(denominator_bits) {
    if (denominator_bits_ < 0 || denominator_bits_ > 62)
        throw std::invalid_argument("denominator must be 2^m with m in [0, 62]");
    for (const auto& v : variables_) {
        if (v.bits < 0 || v.bits > 64)
            throw std::invalid_argument("variable width must be in [0, 64]");
    }
}

void ExactPmf::add(const Outcome& outcome, std::uint64_t count) {
    if (outcome.size() != variables_.size())
        throw std::invalid_argument("outcome arity does not match variable count");
    if (count == 0) return;
    counts_[outcome] += count;
    total_ += count;
    if (total_ > denominator())
        throw std::invalid_argument("counts exceed the declared denominator");
}

void ExactPmf::merge(const ExactPmf& other) {
    if (other.denominator_bits_ != denominator_bits_ || other.variables_.size() != variables_.size())
        throw std::invalid_argument("cannot merge pmfs over different outcome spaces");
    for (const auto& [outcome, count] : other.counts_) add(outcome, count);
}

bool ExactPmf::complete() const { return total_ == denominator(); }

bool ExactPmf::has_variable(const std::string& name) const {
    return std::any_of(variables_.begin(), variables_.end(),
                       [&](const Variable& v) { return v.name == name; });
}

ExactPmf ExactPmf::marginal(const std::vector<std::string>& keep) const {
    std::vector<std::size_t> indices;
    std::vector<Variable> kept;
    indices.reserve(keep.size());
    for (const auto& name : keep) {
        auto it = std::find_if(variables_.begin(), variables_.end(),
                               [&](const Variable& v) { return v.name == name; });
        if (it == variables_.end()) throw UnknownVariable("no variable named '" + name + "'");
        indices.push_back(static_cast<std::size_t>(it - variables_.begin()));
        kept.push_back(*it);
    }
    ExactPmf out(std::move(kept), denominator_bits_);
    Outcome projected(indices.size());
    for (const auto& [outcome, count] : counts_) {
        for (std::size_t i = 0; i < indices.size(); ++i) projected[i] = outcome[indices[i]];
        out.add(projected, count);
    }
    return out;
}

double entropy(const ExactPmf& p) {
    if (!p.complete())
        throw std::invalid_argument("entropy of an incomplete pmf (counts do not sum to 2^m)");
    // H = log2(D) - (1/D) sum c*log2(c). Counts stay exact; this is the only
    // place probabilities touch floating point.
    double acc = 0.0;
    for (const auto& [outcome, count] : p.counts()) {
        acc += static_cast<double>(count) * std::log2(static_cast<double>(count));
    }
    return static_cast<double>(p.denominator_bits()) - acc / static_cast<double>(p.denominator());
}

double mutual_information(const ExactPmf& joint, const std::vector<std::string>& group_a,
                          const std::vector<std::string>& group_b) {
    for (const auto& a : group_a) {
        if (std::find(group_b.begin(), group_b.end(), a) != group_b.end())
            throw std::invalid_argument("mutual information groups must be disjoint");
    }
    std::vector<std::string> both = group_a;
    both.insert(both.end(), group_b.begin(), group_b.end());
    return entropy(joint.marginal(group_a)) + entropy(joint.marginal(group_b)) -
           entropy(joint.marginal(both));
}

}  // namespace icsec
