#include "phylotoric/database.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "phylotoric/serialize.hpp"
#include "phylotoric/version.hpp"

namespace phylotoric {

namespace fs = std::filesystem;

namespace {

const std::set<std::string>& known_datatypes() {
    static const std::set<std::string> kinds = {"invariants", "param_p", "param_q", "fourier",
                                                "ifourier",   "ideal_q", "ideal_p", "serialized"};
    return kinds;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << content;
}

std::string tuple_label(std::size_t index, int n, int gsize) {
    std::string digits(static_cast<std::size_t>(n), '0');
    for (int i = n - 1; i >= 0; --i) {
        digits[static_cast<std::size_t>(i)] =
            static_cast<char>('0' + static_cast<int>(index % static_cast<std::size_t>(gsize)));
        index /= static_cast<std::size_t>(gsize);
    }
    return digits;
}

std::string monomial_str(const Monomial& m, const RingPtr& ring) {
    return Polynomial::from_monomial(ring, m).str();
}

std::string entry_header(const PipelineResult& r, const std::string& what) {
    std::ostringstream out;
    out << "# " << what << "\n";
    out << "# tree_id: " << r.tree_id << "\n";
    out << "# model_id: " << r.model->id << "\n";
    out << "# newick: " << to_newick(*r.tree) << "\n";
    return out.str();
}

std::string manifest_timestamp() {
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        std::time_t t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
        std::tm tm{};
        gmtime_r(&t, &tm);
        char buf[32];
        std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
        return buf;
    }
    return kReleaseTimestamp; // fixed, so rebuilt databases stay byte-identical
}

} // namespace

std::string file_name(const std::string& datatype, int tree_id, const std::string& model_id,
                      const std::string& ext) {
    if (known_datatypes().find(datatype) == known_datatypes().end())
        throw DomainError("unknown datatype '" + datatype + "'");
    static const std::set<std::string> models = {"CFN", "JC", "K2P", "K3P"};
    if (models.find(model_id) == models.end())
        throw DomainError("unknown model id '" + model_id + "'");
    return datatype + "_" + std::to_string(tree_id) + "-" + model_id + "." + ext;
}

std::vector<std::string> emit_entry(const PipelineResult& r, const std::string& out_dir) {
    fs::create_directories(out_dir);
    const int tid = r.tree_id;
    const std::string& mid = r.model->id;
    const int gsize = r.model->group.size();
    const int n = r.tree->n_leaves();
    std::vector<std::string> written;

    auto emit = [&](const std::string& datatype, const std::string& ext,
                    const std::string& content) {
        std::string name = file_name(datatype, tid, mid, ext);
        write_file(fs::path(out_dir) / name, content);
        written.push_back(name);
    };

    // invariants record
    emit("invariants", "yaml", r.record.to_yaml().emit());

    // probability parametrization
    {
        std::ostringstream out;
        out << entry_header(r, "parametrization in probability coordinates");
        out << "# coordinates indexed by leaf states, leaf 1 most significant\n";
        for (std::size_t i = 0; i < r.pm.coords.size(); ++i)
            out << "p_{" << tuple_label(i, n, gsize) << "} = " << r.pm.coords[i].str() << "\n";
        emit("param_p", "txt", out.str());
    }

    // Fourier parametrization
    {
        std::ostringstream out;
        out << entry_header(r, "monomial parametrization in Fourier coordinates");
        out << "# zero coordinates violate the parity constraint\n";
        for (std::size_t i = 0; i < r.fm.coords.size(); ++i) {
            out << "q_{" << tuple_label(i, n, gsize) << "} = ";
            out << (r.fm.coords[i] ? monomial_str(*r.fm.coords[i], r.fm.ring) : "0") << "\n";
        }
        emit("param_q", "txt", out.str());
    }

    // transform and inverse
    {
        std::ostringstream out;
        out << entry_header(r, "Fourier linear transformation");
        out << "# size " << r.ft.dim << " x " << r.ft.dim << ", entries +-1\n";
        for (std::size_t h = 0; h < r.ft.dim; ++h) {
            for (std::size_t g = 0; g < r.ft.dim; ++g)
                out << (g ? " " : "") << r.ft.entry(h, g);
            out << "\n";
        }
        emit("fourier", "txt", out.str());
    }
    {
        std::ostringstream out;
        out << entry_header(r, "inverse Fourier linear transformation");
        out << "# size " << r.ft.dim << " x " << r.ft.dim << ", entries +-1/" << r.ft.dim << "\n";
        for (std::size_t h = 0; h < r.ft.dim; ++h) {
            for (std::size_t g = 0; g < r.ft.dim; ++g)
                out << (g ? " " : "") << r.ft.inverse_entry(h, g).str();
            out << "\n";
        }
        emit("ifourier", "txt", out.str());
    }

    // toric ideal in Fourier coordinates
    {
        const auto& gens = r.ideal.basis()->elements;
        std::ostringstream out;
        out << entry_header(r, "toric ideal of phylogenetic invariants, Fourier coordinates");
        out << "# variables: q1..q" << r.em.nq << " (distinct monomials, first-occurrence order)\n";
        out << "# monomial_order: degrevlex\n";
        if (gens.empty())
            out << "# the ideal is zero: the variety fills its ambient linear space\n";
        else
            out << "# generators: " << gens.size() << " (reduced Groebner basis)\n";
        for (const auto& g : gens) out << g.str() << "\n";
        emit("ideal_q", "txt", out.str());
    }

    // invariants in probability coordinates
    {
        std::ostringstream out;
        out << entry_header(r, "phylogenetic invariants in probability coordinates");
        out << "# substitution used for each Fourier coordinate class:\n";
        for (std::size_t c = 0; c < r.pinv.column_coordinate.size(); ++c)
            out << "#   q" << (c + 1) << " = forward transform row of coordinate h="
                << tuple_label(r.pinv.column_coordinate[c], n, gsize) << "\n";
        out << "# nonlinear invariants: " << r.pinv.generators.size() << "\n";
        for (const auto& g : r.pinv.generators) out << g.str() << "\n";
        for (std::size_t idx : r.pinv.skipped)
            out << "# generator " << (idx + 1)
                << " of the Fourier ideal omitted: expansion over "
                << "the configured limit; see the ideal_q file\n";
        out << "# linear invariants from the " << r.pinv.parity_linear.size()
            << " parity-violating coordinates:\n";
        for (const auto& g : r.pinv.parity_linear) out << g.str() << "\n";
        emit("ideal_p", "txt", out.str());
    }

    // serialized objects
    {
        ObjectStore store;
        std::string tree_hash = store.add_tree(*r.tree);
        std::string model_hash = store.add_model(*r.model);
        store.add_matrix(r.em.A);
        store.add_ideal(r.ideal);
        store.add_record(r.record);
        (void)tree_hash;
        (void)model_hash;
        std::string name = file_name("serialized", tid, mid, "json");
        write_file(fs::path(out_dir) / name, store.to_json_text());
        written.push_back(name);
    }

    return written;
}

BuildReport build_database(int max_leaves, const std::vector<std::string>& models,
                           const std::string& out_dir, int jobs, const PipelineOptions& options) {
    std::vector<std::string> model_ids = models;
    if (model_ids.empty()) model_ids = {"CFN", "JC", "K2P", "K3P"};
    for (const auto& id : model_ids) model_by_id(id); // validate early

    auto entries = catalog(max_leaves);
    struct Task {
        int tree_id;
        const PhyloTree* tree;
        std::string model_id;
    };
    std::vector<Task> tasks;
    for (const auto& e : entries)
        for (const auto& m : model_ids) tasks.push_back({e.tree_id, &e.shape, m});

    BuildReport report;
    report.entries.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            const Task& t = tasks[i];
            BuildEntryStatus& st = report.entries[i];
            st.tree_id = t.tree_id;
            st.model_id = t.model_id;
            try {
                PipelineResult r =
                    compute_entry(*t.tree, model_by_id(t.model_id), options, t.tree_id);
                st.files = emit_entry(r, out_dir);
                st.status = "ok";
            } catch (const std::exception& e) {
                st.status = "failed";
                st.error = e.what();
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // manifest, written once after all entries completed
    Yaml manifest = Yaml::map();
    manifest.add("tool", Yaml::string(kToolName));
    manifest.add("version", Yaml::string(kToolVersion));
    manifest.add("timestamp", Yaml::string(manifest_timestamp()));
    manifest.add("license", Yaml::string("MIT"));
    Yaml list = Yaml::list();
    for (const auto& st : report.entries) {
        Yaml e = Yaml::map();
        e.add("tree_id", Yaml::integer(st.tree_id));
        e.add("model_id", Yaml::string(st.model_id));
        e.add("status", Yaml::string(st.status));
        if (st.status == "ok")
            e.add("files", Yaml::integer(static_cast<long long>(st.files.size())));
        else
            e.add("error", Yaml::string(st.error));
        list.push(std::move(e));
    }
    manifest.add("entries", std::move(list));
    fs::create_directories(out_dir);
    fs::path mpath = fs::path(out_dir) / "manifest.yaml";
    write_file(mpath, manifest.emit());
    report.manifest_path = mpath.string();
    return report;
}

// ---------------------------------------------------------------------------
// reference verification

namespace {

// fields that are stored, never computed
bool is_reference_only_field(const std::string& f) {
    static const std::set<std::string> fields = {"sD", "sd", "mu", "e", "M", "E", "MLdeg"};
    return fields.find(f) != fields.end();
}

std::string record_field(const InvariantRecord& r, const std::string& field, bool& known) {
    known = true;
    if (field == "np") return std::to_string(r.np);
    if (field == "nq") return std::to_string(r.nq);
    if (field == "distinct_p_classes") return std::to_string(r.distinct_p_classes);
    if (field == "dim_cone") return std::to_string(r.dim_cone);
    if (field == "dim_projective") return std::to_string(r.dim_projective);
    if (field == "degree") return r.degree.get_str();
    if (field == "volume_degree")
        return r.volume_degree ? r.volume_degree->get_str() : std::string();
    if (field == "newick") return r.newick;
    if (field == "n_leaves") return std::to_string(r.n_leaves);
    if (field == "degree_profile_total") {
        long total = 0;
        for (const auto& [d, c] : r.degree_profile) total += c;
        return std::to_string(total);
    }
    if (field == "degree_profile_support") {
        std::string s;
        for (const auto& [d, c] : r.degree_profile) s += (s.empty() ? "" : ",") + std::to_string(d);
        return s;
    }
    known = false;
    return {};
}

} // namespace

std::string VerifyReport::text() const {
    std::ostringstream out;
    for (const auto& row : rows) {
        out << "tree " << row.tree_id << " " << row.model_id << " " << row.field << ": ";
        switch (row.status) {
            case VerifyStatus::Match: out << "match (" << row.expected << ")"; break;
            case VerifyStatus::Mismatch:
                out << "MISMATCH (found " << row.found << ", expected " << row.expected << ")";
                break;
            case VerifyStatus::NotComputed: out << "not_computed"; break;
            case VerifyStatus::ReferenceOnly:
                out << "reference_only (" << row.expected << ")";
                break;
        }
        out << "\n";
    }
    for (const auto& m : malformed) out << "malformed reference row: " << m << "\n";
    return out.str();
}

VerifyReport verify_reference(const std::string& db_dir, const std::string& reference_path) {
    std::ifstream in(reference_path, std::ios::binary);
    if (!in) throw Error("cannot read reference table " + reference_path);
    std::stringstream buf;
    buf << in.rdbuf();
    Yaml table = Yaml::parse(buf.str());
    if (!table.is_list()) throw ParseError("reference table must be a list of rows");

    // load whatever records exist in the database
    std::map<std::pair<int, std::string>, InvariantRecord> records;
    if (fs::exists(db_dir))
        for (const auto& entry : fs::directory_iterator(db_dir)) {
            std::string name = entry.path().filename().string();
            if (name.rfind("invariants_", 0) != 0 || entry.path().extension() != ".yaml")
                continue;
            std::ifstream f(entry.path(), std::ios::binary);
            std::stringstream fb;
            fb << f.rdbuf();
            InvariantRecord r = InvariantRecord::from_yaml(Yaml::parse(fb.str()));
            records[{r.tree_id, r.model_id}] = r;
        }

    VerifyReport report;
    for (const auto& row : table.items()) {
        VerifyRow v;
        try {
            v.tree_id = static_cast<int>(row.at("tree_id").as_int());
            v.model_id = row.at("model_id").str();
            v.field = row.at("field").str();
            v.expected = row.at("value").str();
            v.source = row.at("source").str();
        } catch (const std::exception& e) {
            report.malformed.push_back(e.what());
            continue;
        }
        if (is_reference_only_field(v.field)) {
            v.status = VerifyStatus::ReferenceOnly;
            report.rows.push_back(std::move(v));
            continue;
        }
        auto it = records.find({v.tree_id, v.model_id});
        if (it == records.end()) {
            v.status = VerifyStatus::NotComputed;
            report.rows.push_back(std::move(v));
            continue;
        }
        bool known = false;
        v.found = record_field(it->second, v.field, known);
        if (!known || v.found.empty()) {
            v.status = VerifyStatus::NotComputed;
        } else if (v.found == v.expected) {
            v.status = VerifyStatus::Match;
        } else {
            v.status = VerifyStatus::Mismatch;
            report.any_mismatch = true;
        }
        report.rows.push_back(std::move(v));
    }
    return report;
}

} // namespace phylotoric
