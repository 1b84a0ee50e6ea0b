#include "phylotoric/record.hpp"

namespace phylotoric {

namespace {

const char* kConventionKeys[] = {"fourier_normalization", "state_map", "root_rule",
                                 "dimension_convention", "class_partition"};

} // namespace

Yaml InvariantRecord::to_yaml() const {
    Yaml y = Yaml::map();
    y.add("tree_id", Yaml::integer(tree_id));
    y.add("model_id", Yaml::string(model_id));
    y.add("newick", Yaml::string(newick));
    y.add("group", Yaml::string(group));
    y.add("n_leaves", Yaml::integer(n_leaves));
    y.add("np", Yaml::integer(np));
    y.add("nq", Yaml::integer(nq));
    y.add("distinct_p_classes", Yaml::integer(distinct_p_classes));
    y.add("dim_cone", Yaml::integer(dim_cone));
    y.add("dim_projective", Yaml::integer(dim_projective));
    y.add("degree", Yaml::number(degree.get_str()));
    Yaml profile = Yaml::map();
    for (const auto& [deg, count] : degree_profile)
        profile.add(std::to_string(deg), Yaml::integer(count));
    y.add("degree_profile", std::move(profile));
    if (volume_degree) y.add("volume_degree", Yaml::number(volume_degree->get_str()));
    y.add("computed_by", Yaml::string(computed_by));
    Yaml conv = Yaml::map();
    for (const char* key : kConventionKeys) {
        auto it = conventions.find(key);
        if (it != conventions.end()) conv.add(key, Yaml::string(it->second));
    }
    y.add("conventions", std::move(conv));
    if (!reference_only.empty()) {
        Yaml ref = Yaml::map();
        for (const auto& [field, v] : reference_only) {
            Yaml entry = Yaml::map();
            entry.add("value", Yaml::string(v.value));
            entry.add("source", Yaml::string(v.source));
            ref.add(field, std::move(entry));
        }
        y.add("reference_only", std::move(ref));
    }
    return y;
}

InvariantRecord InvariantRecord::from_yaml(const Yaml& y) {
    InvariantRecord r;
    r.tree_id = static_cast<int>(y.at("tree_id").as_int());
    r.model_id = y.at("model_id").str();
    r.newick = y.at("newick").str();
    r.group = y.at("group").str();
    r.n_leaves = static_cast<int>(y.at("n_leaves").as_int());
    r.np = static_cast<int>(y.at("np").as_int());
    r.nq = static_cast<int>(y.at("nq").as_int());
    r.distinct_p_classes = static_cast<int>(y.at("distinct_p_classes").as_int());
    r.dim_cone = static_cast<int>(y.at("dim_cone").as_int());
    r.dim_projective = static_cast<int>(y.at("dim_projective").as_int());
    r.degree = Integer(y.at("degree").str());
    for (const auto& [k, v] : y.at("degree_profile").entries())
        r.degree_profile[std::stoi(k)] = static_cast<int>(v.as_int());
    if (const Yaml* v = y.find("volume_degree")) r.volume_degree = Integer(v->str());
    r.computed_by = y.at("computed_by").str();
    for (const auto& [k, v] : y.at("conventions").entries()) r.conventions[k] = v.str();
    if (const Yaml* ref = y.find("reference_only"))
        for (const auto& [k, v] : ref->entries())
            r.reference_only[k] = {v.at("value").str(), v.at("source").str()};
    return r;
}

bool operator==(const InvariantRecord& a, const InvariantRecord& b) {
    auto ref_eq = [](const std::map<std::string, ReferenceOnlyValue>& x,
                     const std::map<std::string, ReferenceOnlyValue>& y) {
        if (x.size() != y.size()) return false;
        for (const auto& [k, v] : x) {
            auto it = y.find(k);
            if (it == y.end() || it->second.value != v.value || it->second.source != v.source)
                return false;
        }
        return true;
    };
    return a.tree_id == b.tree_id && a.model_id == b.model_id && a.newick == b.newick &&
           a.group == b.group && a.n_leaves == b.n_leaves && a.np == b.np && a.nq == b.nq &&
           a.distinct_p_classes == b.distinct_p_classes && a.dim_cone == b.dim_cone &&
           a.dim_projective == b.dim_projective && a.degree == b.degree &&
           a.degree_profile == b.degree_profile && a.volume_degree == b.volume_degree &&
           a.computed_by == b.computed_by && a.conventions == b.conventions &&
           ref_eq(a.reference_only, b.reference_only);
}

} // namespace phylotoric
