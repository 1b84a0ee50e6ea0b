#include "phylotoric/serialize.hpp"

#include <json.hpp>

#include "phylotoric/sha256.hpp"
#include "phylotoric/version.hpp"

namespace phylotoric {

using nlohmann::json;

namespace {

json record_to_json(const InvariantRecord& r) {
    json j;
    j["tree_id"] = r.tree_id;
    j["model_id"] = r.model_id;
    j["newick"] = r.newick;
    j["group"] = r.group;
    j["n_leaves"] = r.n_leaves;
    j["np"] = r.np;
    j["nq"] = r.nq;
    j["distinct_p_classes"] = r.distinct_p_classes;
    j["dim_cone"] = r.dim_cone;
    j["dim_projective"] = r.dim_projective;
    j["degree"] = r.degree.get_str();
    json profile = json::object();
    for (const auto& [d, c] : r.degree_profile) profile[std::to_string(d)] = c;
    j["degree_profile"] = profile;
    if (r.volume_degree) j["volume_degree"] = r.volume_degree->get_str();
    j["computed_by"] = r.computed_by;
    j["conventions"] = r.conventions;
    json ref = json::object();
    for (const auto& [k, v] : r.reference_only) ref[k] = {{"value", v.value}, {"source", v.source}};
    j["reference_only"] = ref;
    return j;
}

InvariantRecord record_from_json(const json& j) {
    InvariantRecord r;
    r.tree_id = j.at("tree_id").get<int>();
    r.model_id = j.at("model_id").get<std::string>();
    r.newick = j.at("newick").get<std::string>();
    r.group = j.at("group").get<std::string>();
    r.n_leaves = j.at("n_leaves").get<int>();
    r.np = j.at("np").get<int>();
    r.nq = j.at("nq").get<int>();
    r.distinct_p_classes = j.at("distinct_p_classes").get<int>();
    r.dim_cone = j.at("dim_cone").get<int>();
    r.dim_projective = j.at("dim_projective").get<int>();
    r.degree = Integer(j.at("degree").get<std::string>());
    for (auto it = j.at("degree_profile").begin(); it != j.at("degree_profile").end(); ++it)
        r.degree_profile[std::stoi(it.key())] = it.value().get<int>();
    if (j.contains("volume_degree")) r.volume_degree = Integer(j.at("volume_degree").get<std::string>());
    r.computed_by = j.at("computed_by").get<std::string>();
    for (auto it = j.at("conventions").begin(); it != j.at("conventions").end(); ++it)
        r.conventions[it.key()] = it.value().get<std::string>();
    for (auto it = j.at("reference_only").begin(); it != j.at("reference_only").end(); ++it)
        r.reference_only[it.key()] = {it.value().at("value").get<std::string>(),
                                      it.value().at("source").get<std::string>()};
    return r;
}

json terms_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& t : p.terms()) {
        json e = json::array();
        for (std::size_t i = 0; i < t.mono.size(); ++i) e.push_back(t.mono[i]);
        terms.push_back({{"c", t.coeff.str()}, {"e", e}});
    }
    return terms;
}

Polynomial terms_from_json(const RingPtr& ring, const json& terms) {
    std::vector<Term> out;
    for (const auto& t : terms) {
        Monomial m(ring->nvars());
        const auto& e = t.at("e");
        if (e.size() != ring->nvars()) throw ParseError("exponent arity mismatch in payload");
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = e[i].get<std::int32_t>();
        out.push_back({std::move(m), Rational::parse(t.at("c").get<std::string>())});
    }
    return Polynomial::from_terms(ring, std::move(out));
}

int compare_versions(const std::string& a, const std::string& b) {
    std::size_t ia = 0, ib = 0;
    for (int part = 0; part < 3; ++part) {
        long va = std::stol(a.substr(ia));
        long vb = std::stol(b.substr(ib));
        if (va != vb) return va < vb ? -1 : 1;
        ia = a.find('.', ia) + 1;
        ib = b.find('.', ib) + 1;
    }
    return 0;
}

} // namespace

struct ObjectStore::Impl {
    // hash -> full object json {"object_type":..., "context":?, "payload":...}
    std::map<std::string, json> objects;

    std::string put(const std::string& type, json payload, const std::string& context = "") {
        json obj;
        obj["object_type"] = type;
        if (!context.empty()) obj["context"] = context;
        obj["payload"] = std::move(payload);
        std::string hash = sha256_hex(obj.dump());
        objects.emplace(hash, std::move(obj));
        return hash;
    }

    const json& fetch(const std::string& hash, const std::string& type) const {
        auto it = objects.find(hash);
        if (it == objects.end())
            throw ParseError("unresolvable context hash '" + hash + "'");
        if (it->second.at("object_type").get<std::string>() != type)
            throw ParseError("object '" + hash + "' is not a " + type);
        return it->second;
    }
};

ObjectStore::ObjectStore() : impl_(new Impl) {}
ObjectStore::~ObjectStore() { delete impl_; }
ObjectStore::ObjectStore(ObjectStore&& o) noexcept : impl_(o.impl_) { o.impl_ = nullptr; }
ObjectStore& ObjectStore::operator=(ObjectStore&& o) noexcept {
    std::swap(impl_, o.impl_);
    return *this;
}

std::string ObjectStore::add_ring(const RingPtr& ring) {
    return impl_->put("ring", json{{"variables", ring->vars()}});
}

std::string ObjectStore::add_polynomial(const Polynomial& p) {
    std::string ring_hash = add_ring(p.ring());
    return impl_->put("polynomial", json{{"terms", terms_to_json(p)}}, ring_hash);
}

std::string ObjectStore::add_ideal(const Ideal& ideal) {
    std::string ring_hash = add_ring(ideal.ring());
    json gens = json::array();
    for (const auto& g : ideal.generators()) gens.push_back(terms_to_json(g));
    return impl_->put("ideal", json{{"generators", gens}}, ring_hash);
}

std::string ObjectStore::add_matrix(const IntegerMatrix& m) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(m.at(r, c).get_str());
    return impl_->put("matrix",
                      json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}});
}

std::string ObjectStore::add_tree(const PhyloTree& t) {
    return impl_->put("tree", json{{"n_leaves", t.n_leaves()}, {"newick", to_newick(t)}});
}

std::string ObjectStore::add_model(const GroupBasedModel& m) {
    json j;
    j["model_id"] = m.id;
    j["group"] = m.group.label();
    j["classes"] = m.class_of_element;
    j["fourier_classes"] = m.fourier_class_of_element;
    return impl_->put("model", std::move(j));
}

std::string ObjectStore::add_record(const InvariantRecord& r) {
    return impl_->put("record", record_to_json(r));
}

std::vector<std::pair<std::string, std::string>> ObjectStore::objects() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [hash, obj] : impl_->objects)
        out.push_back({hash, obj.at("object_type").get<std::string>()});
    return out;
}

RingPtr ObjectStore::get_ring(const std::string& hash) const {
    const json& obj = impl_->fetch(hash, "ring");
    return Ring::make(obj.at("payload").at("variables").get<std::vector<std::string>>());
}

Polynomial ObjectStore::get_polynomial(const std::string& hash) const {
    const json& obj = impl_->fetch(hash, "polynomial");
    RingPtr ring = get_ring(obj.at("context").get<std::string>());
    return terms_from_json(ring, obj.at("payload").at("terms"));
}

Ideal ObjectStore::get_ideal(const std::string& hash) const {
    const json& obj = impl_->fetch(hash, "ideal");
    RingPtr ring = get_ring(obj.at("context").get<std::string>());
    std::vector<Polynomial> gens;
    for (const auto& g : obj.at("payload").at("generators"))
        gens.push_back(terms_from_json(ring, g));
    return Ideal(ring, std::move(gens));
}

IntegerMatrix ObjectStore::get_matrix(const std::string& hash) const {
    const json& payload = impl_->fetch(hash, "matrix").at("payload");
    IntegerMatrix m(payload.at("rows").get<std::size_t>(), payload.at("cols").get<std::size_t>());
    const auto& entries = payload.at("entries");
    std::size_t k = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            m.at(r, c) = Integer(entries.at(k++).get<std::string>());
    return m;
}

PhyloTree ObjectStore::get_tree(const std::string& hash) const {
    return parse_newick(impl_->fetch(hash, "tree").at("payload").at("newick").get<std::string>());
}

GroupBasedModel ObjectStore::get_model(const std::string& hash) const {
    const json& payload = impl_->fetch(hash, "model").at("payload");
    GroupBasedModel m = model_by_id(payload.at("model_id").get<std::string>());
    if (payload.at("classes").get<std::vector<int>>() != m.class_of_element)
        throw ParseError("stored model classes disagree with this build");
    return m;
}

InvariantRecord ObjectStore::get_record(const std::string& hash) const {
    return record_from_json(impl_->fetch(hash, "record").at("payload"));
}

std::string ObjectStore::to_json_text() const {
    json doc;
    doc["namespace"] = {{"name", kToolName}, {"version", kToolVersion}};
    json objs = json::object();
    for (const auto& [hash, obj] : impl_->objects) objs[hash] = obj;
    doc["objects"] = objs;
    return doc.dump(2) + "\n";
}

ObjectStore ObjectStore::parse(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid serialized file: ") + e.what());
    }
    const json& ns = doc.at("namespace");
    if (ns.at("name").get<std::string>() != kToolName)
        throw ParseError("serialized file from foreign namespace '" +
                         ns.at("name").get<std::string>() + "'");
    if (compare_versions(ns.at("version").get<std::string>(), kToolVersion) > 0)
        throw ParseError("serialized file from newer version " +
                         ns.at("version").get<std::string>());

    static const std::vector<std::string> kTypes = {"ring", "polynomial", "ideal",  "matrix",
                                                    "tree", "model",      "record"};
    ObjectStore store;
    for (auto it = doc.at("objects").begin(); it != doc.at("objects").end(); ++it) {
        const json& obj = it.value();
        std::string type = obj.at("object_type").get<std::string>();
        bool known = false;
        for (const auto& t : kTypes) known = known || t == type;
        if (!known) throw ParseError("unknown object_type '" + type + "'");
        store.impl_->objects[it.key()] = obj;
    }
    // contexts must resolve (stores are flat, so resolution is acyclic by
    // construction; a context hash equal to the object's own is rejected)
    for (const auto& [hash, obj] : store.impl_->objects) {
        if (!obj.contains("context")) continue;
        std::string ctx = obj.at("context").get<std::string>();
        if (ctx == hash) throw ParseError("object '" + hash + "' references itself");
        if (store.impl_->objects.find(ctx) == store.impl_->objects.end())
            throw ParseError("unresolvable context hash '" + ctx + "'");
    }
    return store;
}

} // namespace phylotoric
