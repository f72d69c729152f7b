#include "gradsem/framework.hpp"

#include <set>

#include "gradsem/errors.hpp"

namespace gradsem {

std::string_view to_string(Semantics s) {
    switch (s) {
    case Semantics::TrustBased: return "tb";
    case Semantics::IterativeSchema: return "is";
    case Semantics::MaxBased: return "mb";
    case Semantics::CardBased: return "cb";
    case Semantics::HCategorizer: return "hc";
    }
    return "?";
}

Semantics semantics_from_string(std::string_view name) {
    if (name == "tb") return Semantics::TrustBased;
    if (name == "is") return Semantics::IterativeSchema;
    if (name == "mb") return Semantics::MaxBased;
    if (name == "cb") return Semantics::CardBased;
    if (name == "hc") return Semantics::HCategorizer;
    throw ValidationError("unknown semantics '" + std::string(name) + "' (expected tb|is|mb|cb|hc)");
}

WeightedFramework WeightedFramework::create(std::vector<std::string> arguments,
                                            std::vector<std::pair<std::string, std::string>> attacks,
                                            const std::unordered_map<std::string, double>& weights) {
    WeightedFramework f;
    f.names_ = std::move(arguments);
    f.index_.reserve(f.names_.size());
    for (ArgIndex i = 0; i < f.names_.size(); ++i) {
        if (!f.index_.emplace(f.names_[i], i).second)
            throw ValidationError("duplicate argument '" + f.names_[i] + "'");
    }

    f.attackers_.resize(f.names_.size());
    std::set<std::pair<ArgIndex, ArgIndex>> seen;
    f.attacks_.reserve(attacks.size());
    for (const auto& [from, to] : attacks) {
        const ArgIndex src = f.index_of(from);
        const ArgIndex dst = f.index_of(to);
        if (!seen.emplace(src, dst).second)
            throw ValidationError("duplicate attack (" + from + "," + to + ")");
        f.attacks_.emplace_back(src, dst);
        f.attackers_[dst].push_back(src);
    }

    f.weights_.resize(f.names_.size());
    for (const auto& [name, w] : weights) {
        if (!f.has_argument(name))
            throw ValidationError("weight given for unknown argument '" + name + "'");
    }
    for (ArgIndex i = 0; i < f.names_.size(); ++i) {
        auto it = weights.find(f.names_[i]);
        if (it == weights.end())
            throw ValidationError("missing weight for argument '" + f.names_[i] + "'");
        if (!(it->second >= 0.0 && it->second <= 1.0))
            throw ValidationError("weight of '" + f.names_[i] + "' is " +
                                  std::to_string(it->second) + ", outside [0,1]");
        f.weights_[i] = it->second;
    }
    return f;
}

WeightedFramework WeightedFramework::create(std::vector<std::string> arguments,
                                            std::vector<std::pair<std::string, std::string>> attacks,
                                            std::vector<double> weights) {
    if (weights.size() != arguments.size())
        throw ValidationError("weight count does not match argument count");
    std::unordered_map<std::string, double> map;
    map.reserve(arguments.size());
    for (std::size_t i = 0; i < arguments.size(); ++i) map.emplace(arguments[i], weights[i]);
    if (map.size() != arguments.size())
        throw ValidationError("duplicate argument names");
    return create(std::move(arguments), std::move(attacks), map);
}

ArgIndex WeightedFramework::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw UnknownArgumentError(std::string(name));
    return it->second;
}

bool WeightedFramework::has_argument(std::string_view name) const {
    return index_.find(std::string(name)) != index_.end();
}

const std::vector<ArgIndex>& WeightedFramework::attackers(std::string_view name) const {
    return attackers_[index_of(name)];
}

WeightedFramework WeightedFramework::with_weights(std::vector<double> weights) const {
    if (weights.size() != names_.size())
        throw ValidationError("weight count does not match argument count");
    for (ArgIndex i = 0; i < weights.size(); ++i) {
        if (!(weights[i] >= 0.0 && weights[i] <= 1.0))
            throw ValidationError("weight of '" + names_[i] + "' is " +
                                  std::to_string(weights[i]) + ", outside [0,1]");
    }
    WeightedFramework f(*this);
    f.weights_ = std::move(weights);
    return f;
}

DegreeAssignment DegreeAssignment::checked(std::vector<double> values) {
    for (double v : values) {
        if (!(v >= 0.0 && v <= 1.0))
            throw ValidationError("degree " + std::to_string(v) + " outside [0,1]");
    }
    return DegreeAssignment{std::move(values)};
}

} // namespace gradsem
