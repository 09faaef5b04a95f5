#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "nearcentral/decomposition.hpp"
#include "nearcentral/dipoles.hpp"
#include "nearcentral/errors.hpp"
#include "nearcentral/genchar.hpp"
#include "nearcentral/serialization.hpp"
#include "nearcentral/structure_cache.hpp"
#include "nearcentral/verify.hpp"
#include "nearcentral/z1_algebra.hpp"

namespace nearcentral::cli {

namespace {

struct Common {
    std::string format = "csv";
    std::string output;
    int max_brute_n = 9;
    int jobs = 1;
};

struct ClassArgs {
    std::string shape;
    int tag = 0;
    TaggedClass get() const { return TaggedClass(Partition::parse(shape), tag); }
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

class Csv {
public:
    explicit Csv(std::ostream& out) : out_(out) {}
    void row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            out_ << (i ? "," : "") << csv_field(fields[i]);
        }
        out_ << '\n';
    }

private:
    std::ostream& out_;
};

void check_brute(int n, const Common& common) {
    if (n > common.max_brute_n) {
        throw ResourceLimitExceeded("brute force at n = " + std::to_string(n) + " refused; raise --max-brute-n (now " +
                                    std::to_string(common.max_brute_n) + ")");
    }
}

void check_method(const std::string& method) {
    if (method != "formula" && method != "brute" && method != "both") {
        throw ContractViolation("--method must be formula, brute or both");
    }
}

Integer lookup(const std::map<TaggedClass, Integer>& m, const TaggedClass& c) {
    auto it = m.find(c);
    return it == m.end() ? Integer(0) : it->second;
}

// ---------------------------------------------------------------------------

int genus_table(int n, int p, const std::string& method, const Common& common, std::ostream& out,
                std::ostream& err) {
    check_method(method);
    DipoleQuery{n, p, n - 1}.validate();
    std::optional<GenusHistogram> formula;
    std::optional<GenusHistogram> brute;
    if (method != "brute") {
        if (p >= 2 && n >= 4) {
            formula = genus_counts(n, p);
        } else {
            GenusHistogram h{n, {}};
            for (const auto& [cls, c] : dipole_face_table(n, p, common.jobs)) {
                h.counts[genus_of(cls)] += c;
            }
            formula = h;
        }
    }
    if (method != "formula") {
        check_brute(n, common);
        brute = brute_force_p_q_dipoles({n, p, n - 1}, common.max_brute_n, common.jobs).genus;
    }
    const GenusHistogram& shown = formula ? *formula : *brute;
    const int g_max = (n - 1) / 2;
    if (common.format == "json") {
        Json j;
        j["n"] = n;
        j["p"] = p;
        j["method"] = method;
        Json rows = Json::array();
        for (int g = 0; g <= g_max; ++g) {
            Json row;
            row["g"] = g;
            row["count"] = to_json(shown.at(g));
            rows.push_back(row);
        }
        j["genus"] = rows;
        j["total"] = to_json(shown.total());
        out << j.dump(2) << '\n';
    } else {
        Csv csv(out);
        csv.row({"n", "p", "g", "count"});
        for (int g = 0; g <= g_max; ++g) {
            csv.row({std::to_string(n), std::to_string(p), std::to_string(g), shown.at(g).get_str()});
        }
    }
    if (formula && brute && !(*formula == *brute)) {
        err << "genus counts differ between formula and brute force\n";
        return kMismatch;
    }
    return kOk;
}

int face_table(int n, int p, const std::string& method, const Common& common, std::ostream& out,
               std::ostream& err) {
    check_method(method);
    DipoleQuery{n, p, n - 1}.validate();
    std::optional<std::map<TaggedClass, Integer>> formula;
    std::optional<std::map<TaggedClass, Integer>> brute;
    if (method != "brute") {
        formula = dipole_face_table(n, p, common.jobs);
    }
    if (method != "formula") {
        check_brute(n, common);
        brute = brute_force_p_q_dipoles({n, p, n - 1}, common.max_brute_n, common.jobs).faces;
    }
    const auto& shown = formula ? *formula : *brute;
    if (common.format == "json") {
        Json j;
        j["n"] = n;
        j["p"] = p;
        j["method"] = method;
        Json faces = Json::object();
        for (const auto& [cls, c] : shown) {
            faces[json_key(cls)] = to_json(c);
        }
        j["faces"] = faces;
        out << j.dump(2) << '\n';
    } else {
        Csv csv(out);
        csv.row({"n", "p", "shape", "tag", "genus", "count"});
        for (const auto& [cls, c] : shown) {
            csv.row({std::to_string(n), std::to_string(p), cls.shape().to_compact_string(), std::to_string(cls.tag()),
                     std::to_string(genus_of(cls)), c.get_str()});
        }
    }
    if (formula && brute && *formula != *brute) {
        err << "face counts differ between formula and brute force\n";
        return kMismatch;
    }
    return kOk;
}

int genchar(const TaggedClass& index, const TaggedClass& cls, std::optional<int> n_given, const Common& common,
            std::ostream& out, std::ostream& err) {
    const int n = index.n();
    if (cls.n() != n || (n_given && *n_given != n)) {
        throw ContractViolation("--rho, --mu and --n must describe the same n");
    }
    std::vector<std::pair<std::string, Rational>> methods;
    methods.emplace_back("strahov", genchar_strahov(index, cls));
    if (n <= common.max_brute_n) {
        methods.emplace_back("oracle", genchar_oracle(index, cls));
    }
    if (n >= 2 && cls == TaggedClass(Partition({n - 1, 1}), 1)) {
        methods.emplace_back("closed-form (n-1)-cycle", genchar_at_K_n11(index));
    }
    if (cls == TaggedClass(Partition({n}), n)) {
        methods.emplace_back("closed-form full cycle", genchar_at_full_cycle(index));
    }
    const auto hook = index.shape().hook_leg();
    if (n >= 2 && hook) {
        const int k = *hook;
        if (index.tag() == n - k && k <= n - 2) {
            methods.emplace_back("hook series row k=" + std::to_string(k),
                                 genchar_hook_series(n, k, HookTag::Row, cls));
        }
        if (index.tag() == 1 && k >= 1) {
            methods.emplace_back("hook series column k=" + std::to_string(k),
                                 genchar_hook_series(n, k, HookTag::Column, cls));
        }
    }
    if (cls.shape().length() == 2) {
        const int p = cls.tag();
        for (int k = 0; k <= n - 1; ++k) {
            for (const auto& [family, name] :
                 std::vector<std::pair<TwoPartFamily, std::string>>{{TwoPartFamily::HookRow, "hook-row"},
                                                                    {TwoPartFamily::HookColumn, "hook-column"},
                                                                    {TwoPartFamily::NearHook, "near-hook"}}) {
                std::optional<TaggedClass> member;
                try {
                    member = two_part_index(family, n, k);
                } catch (const ContractViolation&) {
                    continue;
                }
                if (!(*member == index) || (family == TwoPartFamily::NearHook && p < 2)) {
                    continue;
                }
                for (const auto& v : genchar_two_part_branches(family, n, k, p)) {
                    methods.emplace_back("two-part " + name + " k=" + std::to_string(k), v);
                }
            }
        }
    }
    const Rational value = methods.front().second;
    bool agree = true;
    for (const auto& [name, v] : methods) {
        agree = agree && v == value;
    }
    if (common.format == "json") {
        Json j;
        j["index"] = to_json(index);
        j["class"] = to_json(cls);
        j["value"] = to_json(value);
        Json rows = Json::array();
        for (const auto& [name, v] : methods) {
            Json row;
            row["method"] = name;
            row["value"] = to_json(v);
            rows.push_back(row);
        }
        j["methods"] = rows;
        j["agree"] = agree;
        out << j.dump(2) << '\n';
    } else if (common.format == "csv") {
        Csv csv(out);
        csv.row({"method", "value"});
        for (const auto& [name, v] : methods) {
            csv.row({name, v.to_string()});
        }
    } else {
        out << value.to_string() << '\n';
        for (const auto& [name, v] : methods) {
            out << "  " << name << ": " << v.to_string() << '\n';
        }
    }
    if (!agree) {
        err << "methods disagree\n";
        return kMismatch;
    }
    return kOk;
}

int connection(const TaggedClass& a, const TaggedClass& b, const std::optional<TaggedClass>& c,
               const std::string& method, const std::string& cache_dir, const Common& common, std::ostream& out,
               std::ostream& err) {
    check_method(method);
    const int n = a.n();
    if (b.n() != n || (c && c->n() != n)) {
        throw ContractViolation("all classes must be over the same n");
    }
    std::shared_ptr<const StructureConstants> sc;
    if (method != "formula") {
        check_brute(n, common);
        BruteForceLimits limits;
        limits.basis_products = common.max_brute_n;
        sc = cache_dir.empty()
                 ? std::make_shared<const StructureConstants>(StructureConstants::brute_force(n, limits, common.jobs))
                 : StructureCache(cache_dir).get(n, limits, common.jobs);
    }
    const std::vector<TaggedClass> targets = c ? std::vector<TaggedClass>{*c} : tagged_classes_of(n);
    bool agree = true;
    std::vector<std::pair<TaggedClass, Rational>> rows;
    for (const auto& target : targets) {
        std::optional<Rational> f;
        std::optional<Rational> bf;
        if (method != "brute") {
            f = connection_coefficient(a, b, target);
        }
        if (sc) {
            bf = Rational(sc->constant(a, b, target));
        }
        if (f && bf && *f != *bf) {
            agree = false;
        }
        const Rational v = f ? *f : *bf;
        if (c || !v.is_zero()) {
            rows.emplace_back(target, v);
        }
    }
    if (common.format == "json") {
        Json j;
        j["left"] = to_json(a);
        j["right"] = to_json(b);
        j["method"] = method;
        Json terms = Json::array();
        for (const auto& [cls, v] : rows) {
            Json term;
            term["class"] = to_json(cls);
            term["c"] = to_json(v);
            terms.push_back(term);
        }
        j["terms"] = terms;
        out << j.dump(2) << '\n';
    } else {
        Csv csv(out);
        csv.row({"shape", "tag", "c"});
        for (const auto& [cls, v] : rows) {
            csv.row({cls.shape().to_compact_string(), std::to_string(cls.tag()), v.to_string()});
        }
    }
    if (!agree) {
        err << "connection coefficients differ between formula and brute force\n";
        return kMismatch;
    }
    return kOk;
}

int decompose(const std::optional<TaggedClass>& a, const std::optional<TaggedClass>& b, std::optional<int> n_table,
              const std::string& method, const Common& common, std::ostream& out, std::ostream& err) {
    check_method(method);
    std::vector<FactorizationQuery> queries;
    int n = 0;
    if (n_table) {
        if (a || b) {
            throw ContractViolation("give either --n or both classes, not both");
        }
        n = *n_table;
        if (n < 2) {
            throw ContractViolation("--n must be at least 2");
        }
        const auto classes = tagged_classes_of(n);
        for (const auto& x : classes) {
            for (const auto& y : classes) {
                queries.push_back({x, y});
            }
        }
    } else {
        if (!a || !b) {
            throw ContractViolation("decompose needs --lambda/--i and --mu/--j, or --n");
        }
        queries.push_back({*a, *b});
        queries.front().validate();
        n = a->n();
    }
    std::map<std::pair<TaggedClass, TaggedClass>, Integer> brute;
    if (method != "formula") {
        check_brute(n, common);
        brute = brute_decomposition_table(n, common.max_brute_n);
    }
    bool agree = true;
    std::vector<std::pair<const FactorizationQuery*, Rational>> rows;
    for (const auto& q : queries) {
        std::optional<Rational> f;
        std::optional<Rational> bf;
        if (method != "brute") {
            f = decomposition_count(q);
        }
        if (method != "formula") {
            auto it = brute.find({q.left, q.right});
            bf = Rational(it == brute.end() ? Integer(0) : it->second);
        }
        if (f && bf && *f != *bf) {
            agree = false;
        }
        rows.emplace_back(&q, f ? *f : *bf);
    }
    if (common.format == "json") {
        Json j;
        j["n"] = n;
        j["method"] = method;
        Json list = Json::array();
        for (const auto& [q, v] : rows) {
            Json row;
            row["left"] = to_json(q->left);
            row["right"] = to_json(q->right);
            row["count"] = to_json(v);
            list.push_back(row);
        }
        j["counts"] = list;
        out << j.dump(2) << '\n';
    } else {
        Csv csv(out);
        csv.row({"left_shape", "left_tag", "right_shape", "right_tag", "count"});
        for (const auto& [q, v] : rows) {
            csv.row({q->left.shape().to_compact_string(), std::to_string(q->left.tag()),
                     q->right.shape().to_compact_string(), std::to_string(q->right.tag()), v.to_string()});
        }
    }
    if (!agree) {
        err << "decomposition counts differ between formula and brute force\n";
        return kMismatch;
    }
    return kOk;
}

int symmetry(int n_min, int n_max, int witness_n, const Common& common, std::ostream& out, std::ostream& err) {
    if (n_min < 4 || n_max < n_min) {
        throw ContractViolation("symmetry needs 4 <= --n-min <= --n-max");
    }
    std::vector<std::pair<int, SymmetryVerdict>> rows;
    bool all_equal = true;
    for (int n = n_min; n <= n_max; ++n) {
        for (const auto& v : symmetry_check(n)) {
            rows.emplace_back(n, v);
            all_equal = all_equal && v.equal;
        }
    }
    std::optional<AsymmetryWitness> witness;
    if (witness_n >= 4) {
        check_brute(4, common);
        witness = find_face_type_asymmetry(witness_n);
    }
    if (common.format == "json") {
        Json j;
        Json list = Json::array();
        for (const auto& [n, v] : rows) {
            Json row;
            row["n"] = n;
            row["p"] = v.p;
            row["p_prime"] = v.p_prime;
            row["equal"] = v.equal;
            list.push_back(row);
        }
        j["pairs"] = list;
        if (witness) {
            Json w;
            w["n"] = witness->n;
            w["p"] = witness->p;
            w["p_prime"] = witness->p_prime;
            w["class"] = to_json(witness->face_class);
            w["count_p"] = to_json(witness->count_p);
            w["count_p_prime"] = to_json(witness->count_p_prime);
            j["witness"] = w;
        } else if (witness_n >= 4) {
            j["witness"] = nullptr;
        }
        out << j.dump(2) << '\n';
    } else {
        Csv csv(out);
        csv.row({"n", "p", "p_prime", "equal"});
        for (const auto& [n, v] : rows) {
            csv.row({std::to_string(n), std::to_string(v.p), std::to_string(v.p_prime), v.equal ? "true" : "false"});
        }
        if (witness) {
            err << "witness: n=" << witness->n << " class " << witness->face_class.to_string() << " has "
                << witness->count_p.get_str() << " dipoles at p=" << witness->p << " and "
                << witness->count_p_prime.get_str() << " at p=" << witness->p_prime << '\n';
        }
    }
    if (!all_equal || (witness_n >= 4 && !witness)) {
        err << "symmetry check failed\n";
        return kMismatch;
    }
    return kOk;
}

int verify(const std::string& suite, int n_max, const Common& common, std::ostream& out, std::ostream& err) {
    if (n_max < 1) {
        throw ContractViolation("--n-max must be positive");
    }
    const auto reports = run_suite(suite, n_max, common.max_brute_n, common.jobs);
    bool ok = true;
    if (common.format == "json") {
        Json list = Json::array();
        for (const auto& r : reports) {
            Json row;
            row["suite"] = r.name;
            row["checks"] = r.checks;
            row["passed"] = r.passed();
            row["failures"] = r.failures;
            list.push_back(row);
            ok = ok && r.passed();
        }
        Json j;
        j["n_max"] = n_max;
        j["suites"] = list;
        out << j.dump(2) << '\n';
    } else {
        Csv csv(out);
        csv.row({"suite", "checks", "failures", "status"});
        for (const auto& r : reports) {
            csv.row({r.name, std::to_string(r.checks), std::to_string(r.failures.size()),
                     r.passed() ? "PASS" : "FAIL"});
            for (const auto& f : r.failures) {
                err << r.name << ": " << f << '\n';
            }
            ok = ok && r.passed();
        }
    }
    return ok ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized characters, Z1(n) and dipole enumeration", "nearcentral"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub, const std::vector<std::string>& formats) {
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--output", common.output, "Write results to this file instead of stdout");
        sub->add_option("--max-brute-n", common.max_brute_n, "Largest n for exhaustive scans")
            ->check(CLI::Range(1, 12));
        sub->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);
    };

    int n = 0;
    int p = 0;
    std::string method = "formula";

    auto* genus = app.add_subcommand("genus-table", "Dipole counts per genus");
    genus->add_option("--n", n, "Number of edges")->required();
    genus->add_option("--p", p, "Root jump")->required();
    genus->add_option("--method", method, "formula, brute or both");
    add_common(genus, {"csv", "json"});

    auto* face = app.add_subcommand("face-table", "Dipole counts per face class");
    face->add_option("--n", n, "Number of edges")->required();
    face->add_option("--p", p, "Root jump")->required();
    face->add_option("--method", method, "formula, brute or both");
    add_common(face, {"csv", "json"});

    ClassArgs rho;
    ClassArgs mu;
    std::optional<int> n_opt;
    auto* gc = app.add_subcommand("genchar", "Evaluate gamma^{rho,ell}_{mu,j} by every available method");
    gc->add_option("--rho", rho.shape, "Index shape, e.g. 3,1")->required();
    gc->add_option("--ell", rho.tag, "Index tag")->required();
    gc->add_option("--mu", mu.shape, "Class shape")->required();
    gc->add_option("--j", mu.tag, "Class tag")->required();
    gc->add_option("--n", n_opt, "Expected n");
    add_common(gc, {"text", "csv", "json"});

    ClassArgs left;
    ClassArgs right;
    std::string nu_shape;
    int nu_tag = 0;
    std::string cache_dir;
    auto* conn = app.add_subcommand("connection", "Connection coefficients of K_{lambda,i} K_{mu,j}");
    conn->add_option("--lambda", left.shape, "First shape")->required();
    conn->add_option("--i", left.tag, "First tag")->required();
    conn->add_option("--mu", right.shape, "Second shape")->required();
    conn->add_option("--j", right.tag, "Second tag")->required();
    auto* nu_opt = conn->add_option("--nu", nu_shape, "Target shape (default: every class)");
    conn->add_option("--k", nu_tag, "Target tag")->needs(nu_opt);
    nu_opt->needs(conn->get_option("--k"));
    conn->add_option("--method", method, "formula, brute or both");
    conn->add_option("--cache-dir", cache_dir, "Directory for stored structure constants");
    add_common(conn, {"csv", "json"});

    auto* dec = app.add_subcommand("decompose", "Factorizations of (1 2 ... n) into two near-central factors");
    auto* l_opt = dec->add_option("--lambda", left.shape, "First shape");
    auto* i_opt = dec->add_option("--i", left.tag, "First tag");
    auto* m_opt = dec->add_option("--mu", right.shape, "Second shape");
    auto* j_opt = dec->add_option("--j", right.tag, "Second tag");
    auto* dn_opt = dec->add_option("--n", n_opt, "Tabulate every pair of classes of n");
    l_opt->needs(i_opt, m_opt, j_opt)->excludes(dn_opt);
    dec->add_option("--method", method, "formula, brute or both");
    add_common(dec, {"csv", "json"});

    int n_min = 4;
    int n_max = 40;
    int witness_n = 7;
    auto* sym = app.add_subcommand("symmetry", "Compare D_{n,p} with D_{n,n+1-p}");
    sym->add_option("--n-min", n_min, "Smallest n");
    sym->add_option("--n-max", n_max, "Largest n");
    sym->add_option("--witness-n", witness_n, "Search n <= this for a face-type witness (0 to skip)");
    add_common(sym, {"csv", "json"});

    std::string suite = "all";
    int verify_n_max = 6;
    auto* ver = app.add_subcommand("verify", "Regenerate tables and check them against brute force");
    std::vector<std::string> suites = suite_names();
    suites.insert(suites.begin(), "all");
    ver->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suites));
    ver->add_option("--n-max", verify_n_max, "Largest n");
    add_common(ver, {"csv", "json"});

    std::vector<std::string> argv_store{"nearcentral"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    std::ostringstream buffer;
    int status = kOk;
    try {
        if (genus->parsed()) {
            status = genus_table(n, p, method, common, buffer, err);
        } else if (face->parsed()) {
            status = face_table(n, p, method, common, buffer, err);
        } else if (gc->parsed()) {
            status = genchar(rho.get(), mu.get(), n_opt, common, buffer, err);
        } else if (conn->parsed()) {
            std::optional<TaggedClass> target;
            if (!nu_shape.empty()) {
                target = TaggedClass(Partition::parse(nu_shape), nu_tag);
            }
            status = connection(left.get(), right.get(), target, method, cache_dir, common, buffer, err);
        } else if (dec->parsed()) {
            std::optional<TaggedClass> a;
            std::optional<TaggedClass> b;
            if (l_opt->count() > 0) {
                a = left.get();
                b = right.get();
            }
            status = decompose(a, b, n_opt, method, common, buffer, err);
        } else if (sym->parsed()) {
            status = symmetry(n_min, n_max, witness_n, common, buffer, err);
        } else if (ver->parsed()) {
            status = verify(suite, verify_n_max, common, buffer, err);
        }
    } catch (const ResourceLimitExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return kRefused;
    } catch (const ContractViolation& e) {
        err << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const IdentityFailure& e) {
        err << "verification failed: " << e.what() << '\n';
        return kMismatch;
    }

    if (common.output.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(common.output, std::ios::binary | std::ios::trunc);
        file << buffer.str();
        if (!file) {
            err << "cannot write " << common.output << '\n';
            return kUsage;
        }
    }
    return status;
}

}  // namespace nearcentral::cli
