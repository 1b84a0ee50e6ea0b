#ifndef PHYLOTORIC_SERIALIZE_HPP
#define PHYLOTORIC_SERIALIZE_HPP

#include <string>
#include <vector>

#include "phylotoric/ideal.hpp"
#include "phylotoric/matrix.hpp"
#include "phylotoric/model.hpp"
#include "phylotoric/record.hpp"
#include "phylotoric/tree.hpp"

namespace phylotoric {

// Content-addressed store of serialized objects.  Saved files are JSON with
// sorted keys and canonical number rendering (rationals as "num/den" strings,
// integers as unbounded decimal strings), so two saves of the same objects
// are byte-identical.  Objects that live in a ring reference it by hash.
class ObjectStore {
public:
    ObjectStore();
    ~ObjectStore();
    ObjectStore(ObjectStore&&) noexcept;
    ObjectStore& operator=(ObjectStore&&) noexcept;

    std::string add_ring(const RingPtr& ring);
    std::string add_polynomial(const Polynomial& p);
    std::string add_ideal(const Ideal& ideal);
    std::string add_matrix(const IntegerMatrix& m);
    std::string add_tree(const PhyloTree& t);
    std::string add_model(const GroupBasedModel& m);
    std::string add_record(const InvariantRecord& r);

    // (hash, object_type) pairs in hash order.
    std::vector<std::pair<std::string, std::string>> objects() const;

    RingPtr get_ring(const std::string& hash) const;
    Polynomial get_polynomial(const std::string& hash) const;
    Ideal get_ideal(const std::string& hash) const;
    IntegerMatrix get_matrix(const std::string& hash) const;
    PhyloTree get_tree(const std::string& hash) const;
    GroupBasedModel get_model(const std::string& hash) const;
    InvariantRecord get_record(const std::string& hash) const;

    std::string to_json_text() const;
    // Validates the namespace (rejects files from a newer version), object
    // types, and that every context hash resolves acyclically.
    static ObjectStore parse(const std::string& text);

private:
    struct Impl;
    Impl* impl_;
};

} // namespace phylotoric

#endif
