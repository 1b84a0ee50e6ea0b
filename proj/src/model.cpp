#include "phylotoric/model.hpp"

#include <algorithm>
#include <map>

namespace phylotoric {

void compute_fourier_classes(GroupBasedModel& model) {
    const auto& G = model.group;
    // signature of h: the vector of character sums over each probability
    // class; the Fourier parameter of an edge depends on h only through it
    std::vector<std::vector<int>> signatures;
    for (int h = 0; h < G.size(); ++h) {
        std::vector<int> sig(static_cast<std::size_t>(model.n_classes), 0);
        for (int g = 0; g < G.size(); ++g)
            sig[static_cast<std::size_t>(model.class_of_element[static_cast<std::size_t>(g)])] +=
                G.character(h, g);
        signatures.push_back(std::move(sig));
    }
    model.fourier_class_of_element.assign(static_cast<std::size_t>(G.size()), -1);
    int next = 0;
    for (int h = 0; h < G.size(); ++h) {
        if (model.fourier_class_of_element[static_cast<std::size_t>(h)] >= 0) continue;
        for (int g = h; g < G.size(); ++g)
            if (signatures[static_cast<std::size_t>(g)] == signatures[static_cast<std::size_t>(h)])
                model.fourier_class_of_element[static_cast<std::size_t>(g)] = next;
        ++next;
    }
    model.n_fourier_classes = next;
    if (model.n_fourier_classes > model.n_classes)
        throw Error("model partition transforms to more classes than it has");
}

namespace {

GroupBasedModel make_model(std::string id, int k, std::vector<std::string> states,
                           std::vector<int> classes) {
    GroupBasedModel m;
    m.id = std::move(id);
    m.group = FiniteAbelianGroup{k};
    m.state_names = std::move(states);
    m.class_of_element = std::move(classes);
    m.n_classes = 1 + *std::max_element(m.class_of_element.begin(), m.class_of_element.end());
    if (m.class_of_element[0] != 0 ||
        std::count(m.class_of_element.begin(), m.class_of_element.end(), 0) != 1)
        throw Error("identity element must form its own class");
    compute_fourier_classes(m);
    return m;
}

} // namespace

std::vector<GroupBasedModel> builtin_models() {
    // state map for the 4-state models: A=00, C=01, G=10, T=11, so the
    // purine transition A<->G adds (1,0)
    static const std::vector<GroupBasedModel> models = [] {
        std::vector<GroupBasedModel> v;
        v.push_back(make_model("CFN", 1, {"0", "1"}, {0, 1}));
        v.push_back(make_model("JC", 2, {"A", "C", "G", "T"}, {0, 1, 1, 1}));
        v.push_back(make_model("K2P", 2, {"A", "C", "G", "T"}, {0, 2, 1, 2}));
        v.push_back(make_model("K3P", 2, {"A", "C", "G", "T"}, {0, 1, 2, 3}));
        return v;
    }();
    return models;
}

const GroupBasedModel& model_by_id(const std::string& id) {
    static const std::vector<GroupBasedModel> models = builtin_models();
    for (const auto& m : models)
        if (m.id == id) return m;
    throw DomainError("unknown model id '" + id + "' (expected CFN, JC, K2P or K3P)");
}

int character_value(const FiniteAbelianGroup& G, int h, int g) { return G.character(h, g); }

std::vector<std::vector<std::string>> transition_matrix_symbolic(const GroupBasedModel& model,
                                                                 int edge_id) {
    if (edge_id < 1) throw DomainError("edge ids are positive");
    int n = model.group.size();
    std::vector<std::vector<std::string>> M(static_cast<std::size_t>(n),
                                            std::vector<std::string>(static_cast<std::size_t>(n)));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            M[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] =
                model.prob_param_name(edge_id, model.class_of(model.group.add(g, h)));
    return M;
}

std::string GroupBasedModel::class_partition_description() const {
    std::map<int, std::vector<std::string>> by_class;
    for (int g = 0; g < group.size(); ++g)
        by_class[class_of_element[static_cast<std::size_t>(g)]].push_back(group.element_name(g));
    std::string s;
    for (auto& [c, elems] : by_class) {
        if (c) s += " | ";
        for (std::size_t i = 0; i < elems.size(); ++i) s += (i ? "," : "") + elems[i];
    }
    return "{" + s + "}";
}

} // namespace phylotoric
