/* command line front end: every domain object goes through the shared text
 * format, names resolve against an optional manifest, and the verify driver
 * runs proposition checks on files or seeded fuzz instances.
 *
 * exit codes: 0 success, 1 malformed input (message names the field),
 * 2 precondition violation (valid shape, impossible math), 3 verification
 * found a genuine failure. */

#include <homext/fuzz.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace homext;
using nlohmann::json;

namespace {

struct Inputs {
    std::string manifest_path;
    long long ring_n = 0;
    std::optional<Manifest> man;

    void load() {
        if (manifest_path.empty()) return;
        std::ifstream in(manifest_path);
        if (!in) throw ParseError("cannot open manifest '" + manifest_path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        man = parse_manifest(ss.str());
    }
    Ring ring() const {
        if (man) return man->ring;
        if (ring_n == 0) throw ParseError("ring: required (pass --ring N or a manifest)");
        try {
            return Ring::make(Int(ring_n));
        } catch (const PreconditionError& e) {
            throw ParseError(std::string("ring: ") + e.what());
        }
    }
};

bool looks_inline(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return c == '[' || c == '{';
    return false;
}

Module get_module(const Inputs& in, const std::string& s, const std::string& field) {
    if (looks_inline(s)) return parse_module(s, in.ring());
    if (in.man) return in.man->module_at(s);
    throw ParseError(field + ": unknown module '" + s + "' (no manifest loaded)");
}
Morphism get_morphism(const Inputs& in, const std::string& s, const std::string& field) {
    if (looks_inline(s)) return parse_morphism(s, in.ring());
    if (in.man) return in.man->morphism_at(s);
    throw ParseError(field + ": unknown morphism '" + s + "' (no manifest loaded)");
}
ChainComplex get_complex(const Inputs& in, const std::string& s, const std::string& field) {
    if (looks_inline(s)) return parse_complex(s, in.ring());
    if (in.man) return in.man->complex_at(s);
    throw ParseError(field + ": unknown complex '" + s + "' (no manifest loaded)");
}
Extension get_extension(const Inputs& in, const std::string& s, const std::string& field) {
    if (looks_inline(s)) return parse_extension(s, in.ring());
    if (in.man) return in.man->extension_at(s);
    throw ParseError(field + ": unknown extension '" + s + "' (no manifest loaded)");
}
TestClass get_class(const Inputs& in, const std::string& s, const std::string& field) {
    if (looks_inline(s)) return parse_class(s, in.ring());
    if (in.man) return in.man->class_at(s);
    throw ParseError(field + ": unknown class '" + s + "' (no manifest loaded)");
}

json jmat(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).convert_to<long long>());
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix parse_matrix_arg(const std::string& s) {
    json j = json::parse(s, nullptr, false);
    if (j.is_discarded() || !j.is_array()) throw ParseError("matrix is not a JSON array");
    std::size_t rows = j.size();
    std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ParseError("matrix[" + std::to_string(i) + "] must have " +
                             std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[i][c].is_number_integer())
                throw ParseError("matrix[" + std::to_string(i) + "][" + std::to_string(c) +
                                 "] must be an integer");
            m.at(i, c) = Int(j[i][c].get<long long>());
        }
    }
    return m;
}

std::vector<Int> parse_coords_arg(const std::string& s) {
    json j = json::parse(s, nullptr, false);
    if (j.is_discarded() || !j.is_array()) throw ParseError("coords is not a JSON array");
    std::vector<Int> c;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("coords entries must be integers");
        c.push_back(Int(v.get<long long>()));
    }
    return c;
}

Module group_from_orders(const Ring& r, const std::vector<Int>& orders) {
    IntMatrix rel(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) rel.at(i, i) = orders[i];
    Subquotient sq = present_subquotient(IntMatrix::identity(orders.size()), rel);
    return Module::make(r, sq.factors);
}

unsigned thread_budget() {
    if (const char* env = std::getenv("HOMEXT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return std::max(1u, std::min(hw, 4u));
}

/* ---- verify driver ---- */

int cmd_verify(const std::string& prop, const std::string& instance_path,
               const std::vector<std::uint64_t>& fuzz, long long ring_n, long degree,
               const std::string& fail_dir) {
    const auto& ids = all_prop_ids();
    if (std::find(ids.begin(), ids.end(), prop) == ids.end())
        throw ParseError("unknown proposition id '" + prop + "'");
    std::optional<Int> ringN;
    if (ring_n != 0) ringN = Int(ring_n);

    if (!instance_path.empty()) {
        std::ifstream in(instance_path);
        if (!in) throw ParseError("cannot open manifest '" + instance_path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        Manifest man = parse_manifest(ss.str());
        VerificationReport rep = run_manifest_case(prop, man, degree);
        std::cout << rep.to_text();
        return rep.ok ? 0 : 3;
    }

    const std::uint64_t seed = fuzz[0], count = fuzz[1];
    struct Slot {
        std::string line;
        bool ok = false;
        bool flagged = false;
        std::string fail_text;  // replay manifest when failed
    };
    std::vector<Slot> slots(count);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (;;) {
            std::uint64_t i = next.fetch_add(1);
            if (i >= count) return;
            Slot& s = slots[i];
            std::ostringstream os;
            try {
                VerificationReport rep = run_fuzz_case(prop, seed, i, ringN);
                s.ok = rep.ok;
                s.flagged = rep.ok && !rep.hypothesis_met;
                os << "#" << i << " " << (s.flagged ? "FLAGGED" : rep.ok ? "PASS" : "FAIL")
                   << " " << rep.instance_desc << " left " << rep.left_order << " right "
                   << rep.right_order;
                if (!rep.ok) {
                    for (const auto& f : rep.failures) os << "\n    " << f;
                    s.fail_text = dump_manifest(fuzz_case_manifest(prop, seed, i, ringN));
                }
            } catch (const std::exception& e) {
                s.ok = false;
                os << "#" << i << " FAIL instance raised: " << e.what();
                try {
                    s.fail_text = dump_manifest(fuzz_case_manifest(prop, seed, i, ringN));
                } catch (...) {
                }
            }
            s.line = os.str();
        }
    };
    unsigned nthreads = std::min<std::uint64_t>(thread_budget(), std::max<std::uint64_t>(count, 1));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t + 1 < nthreads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    std::uint64_t pass = 0, flagged = 0;
    for (const Slot& s : slots) {
        pass += s.ok ? 1 : 0;
        flagged += s.flagged ? 1 : 0;
    }
    for (std::uint64_t i = 0; i < count; ++i) {
        std::cout << slots[i].line << "\n";
        if (!slots[i].fail_text.empty()) {
            std::string path = fail_dir + "/homext-fail-" + prop + "-" + std::to_string(seed) +
                               "-" + std::to_string(i) + ".json";
            std::ofstream out(path);
            out << slots[i].fail_text;
            std::cout << "    instance written to " << path << "\n";
        }
    }
    std::cout << pass << "/" << count << " pass";
    if (flagged) std::cout << " (" << flagged << " hypothesis-flagged)";
    std::cout << "\n";
    json trailer{{"prop", prop}, {"seed", seed}, {"count", count}, {"ok", pass == count}};
    std::cout << trailer.dump() << "\n";
    return pass == count ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homological algebra over Z/N: modules, complexes, extensions"};
    app.require_subcommand(1);

    Inputs in;
    std::string sA, sB, sC, sD, sF, sG, sM, sS, sT, sX, sCoords, sMatrix, sKind = "dw";
    long long spot = 1;
    long degree = 0;
    bool have_degree = false, right_side = false;
    std::size_t depth = 2;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--manifest", in.manifest_path, "manifest file with named objects");
        sub->add_option("--ring", in.ring_n, "ring modulus N for inline objects");
    };

    CLI::App* c_snf = app.add_subcommand("snf", "Smith normal form U*A*V = D");
    c_snf->add_option("-M,--matrix", sMatrix, "integer matrix as JSON rows")->required();

    CLI::App* c_hom = app.add_subcommand("hom", "Hom group of two modules");
    add_common(c_hom);
    c_hom->add_option("-A", sA, "source module")->required();
    c_hom->add_option("-B", sB, "target module")->required();

    CLI::App* c_ker = app.add_subcommand("kernel", "kernel subobject of a morphism");
    add_common(c_ker);
    c_ker->add_option("-f", sA, "morphism")->required();

    CLI::App* c_cok = app.add_subcommand("cokernel", "cokernel quotient of a morphism");
    add_common(c_cok);
    c_cok->add_option("-f", sA, "morphism")->required();

    CLI::App* c_pb = app.add_subcommand("pullback", "pullback of f: A->C, g: B->C");
    add_common(c_pb);
    c_pb->add_option("-f", sA, "morphism A->C")->required();
    c_pb->add_option("-g", sB, "morphism B->C")->required();

    CLI::App* c_po = app.add_subcommand("pushout", "pushout of f: C->A, g: C->B");
    add_common(c_po);
    c_po->add_option("-f", sA, "morphism C->A")->required();
    c_po->add_option("-g", sB, "morphism C->B")->required();

    CLI::App* c_ext = app.add_subcommand("ext", "Ext^i(C, D) with generator cocycles");
    add_common(c_ext);
    c_ext->add_option("-C", sC, "module C")->required();
    c_ext->add_option("-D", sD, "module D")->required();
    c_ext->add_option("-i", spot, "cohomological spot (default 1)");

    CLI::App* c_gext = app.add_subcommand("gext", "Gorenstein relative Ext^i(M, D)");
    add_common(c_gext);
    c_gext->add_option("-M", sM, "module M")->required();
    c_gext->add_option("-D", sD, "module D")->required();
    c_gext->add_option("-i", spot, "spot (default 1)");

    CLI::App* c_rel = app.add_subcommand("relext", "relative Ext subgroup for a class");
    add_common(c_rel);
    c_rel->add_option("-C", sC, "module C")->required();
    c_rel->add_option("-D", sD, "module D")->required();
    c_rel->add_option("-F", sF, "test class")->required();
    c_rel->add_option("-i", spot, "spot (default 1)");
    c_rel->add_flag("--right", right_side, "right-relative subgroup (via duality)");

    CLI::App* c_baer = app.add_subcommand("baer", "Baer sum of two degree-1 extensions");
    add_common(c_baer);
    c_baer->add_option("-S", sS, "first extension")->required();
    c_baer->add_option("-T", sT, "second extension")->required();

    CLI::App* c_phi = app.add_subcommand("phi", "cocycle class of a degree-1 extension");
    add_common(c_phi);
    c_phi->add_option("-S", sS, "extension")->required();

    CLI::App* c_psi = app.add_subcommand("psi", "extension realizing Ext^1 coordinates");
    add_common(c_psi);
    c_psi->add_option("-C", sC, "module C")->required();
    c_psi->add_option("-D", sD, "module D")->required();
    c_psi->add_option("--coords", sCoords, "coordinates as JSON array")->required();

    CLI::App* c_hml = app.add_subcommand("homology", "homology of a chain complex");
    add_common(c_hml);
    c_hml->add_option("-X", sX, "complex")->required();
    c_hml->add_option("-m,--degree", degree, "single degree (default: whole window)")
        ->each([&](const std::string&) { have_degree = true; });

    CLI::App* c_mem = app.add_subcommand("membership", "complex class membership test");
    add_common(c_mem);
    c_mem->add_option("-X", sX, "complex")->required();
    c_mem->add_option("-F", sF, "test class")->required();
    c_mem->add_option("--kind", sKind, "dw | cx | dg (default dw)");

    CLI::App* c_res = app.add_subcommand("resolve", "canonical free resolution");
    add_common(c_res);
    c_res->add_option("-M", sM, "module")->required();
    c_res->add_option("--depth", depth, "number of syzygies (default 2)");

    CLI::App* c_ver = app.add_subcommand("verify", "check a proposition on instances");
    add_common(c_ver);
    std::string prop, instance_path, fail_dir = ".";
    std::vector<std::uint64_t> fuzz;
    c_ver->add_option("prop", prop, "proposition id, e.g. 1.1, 4.2.3, 5.mono.2, 6.gext")
        ->required();
    c_ver->add_option("instance", instance_path, "manifest file with the named slots");
    c_ver->add_option("--fuzz", fuzz, "seed and instance count")->expected(2);
    c_ver->add_option("--degree", degree, "degree of interest for file instances (default 0)");
    c_ver->add_option("--fail-dir", fail_dir, "directory for replayable failure instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        in.load();
        if (c_snf->parsed()) {
            IntMatrix A = parse_matrix_arg(sMatrix);
            SnfResult r = snf(A);
            std::cout << "D = diag(";
            for (std::size_t t = 0; t < std::min(r.D.rows, r.D.cols); ++t)
                std::cout << (t ? ", " : "") << r.D.at(t, t);
            std::cout << ")\n";
            std::cout << json{{"U", jmat(r.U)}, {"D", jmat(r.D)}, {"V", jmat(r.V)}}.dump()
                      << "\n";
        } else if (c_hom->parsed()) {
            Module A = get_module(in, sA, "A"), B = get_module(in, sB, "B");
            HomGroup H = hom_group(A, B);
            Module g = group_from_orders(in.ring(), H.orders);
            std::cout << "Hom(" << describe_module(A) << ", " << describe_module(B)
                      << ") = " << describe_module(g) << "\n"
                      << dump_module(g) << "\n";
        } else if (c_ker->parsed()) {
            SubObject K = kernel(get_morphism(in, sA, "f"));
            std::cout << "kernel = " << describe_module(K.obj) << "\n";
            std::cout << json{{"object", json::parse(dump_module(K.obj))},
                              {"mono", json::parse(dump_morphism(K.mono))}}
                             .dump()
                      << "\n";
        } else if (c_cok->parsed()) {
            QuotObject Q = cokernel(get_morphism(in, sA, "f"));
            std::cout << "cokernel = " << describe_module(Q.obj) << "\n";
            std::cout << json{{"object", json::parse(dump_module(Q.obj))},
                              {"epi", json::parse(dump_morphism(Q.epi))}}
                             .dump()
                      << "\n";
        } else if (c_pb->parsed()) {
            PullbackResult r = pullback(get_morphism(in, sA, "f"), get_morphism(in, sB, "g"));
            std::cout << "pullback = " << describe_module(r.obj) << "\n";
            std::cout << json{{"object", json::parse(dump_module(r.obj))},
                              {"toA", json::parse(dump_morphism(r.toA))},
                              {"toB", json::parse(dump_morphism(r.toB))}}
                             .dump()
                      << "\n";
        } else if (c_po->parsed()) {
            PushoutResult r = pushout(get_morphism(in, sA, "f"), get_morphism(in, sB, "g"));
            std::cout << "pushout = " << describe_module(r.obj) << "\n";
            std::cout << json{{"object", json::parse(dump_module(r.obj))},
                              {"fromA", json::parse(dump_morphism(r.fromA))},
                              {"fromB", json::parse(dump_morphism(r.fromB))}}
                             .dump()
                      << "\n";
        } else if (c_ext->parsed()) {
            if (spot < 1) throw ParseError("i must be at least 1");
            ExtGroup G = ext_group(static_cast<std::size_t>(spot), get_module(in, sC, "C"),
                                   get_module(in, sD, "D"));
            std::cout << "Ext^" << spot << "(" << describe_module(G.C) << ", "
                      << describe_module(G.D) << ") = " << describe_module(G.group) << "\n";
            json gens = json::array();
            for (std::size_t t = 0; t < G.ngens(); ++t)
                gens.push_back(json::parse(dump_morphism(G.cocycle(t))));
            std::cout << json{{"group", json::parse(dump_module(G.group))}, {"cocycles", gens}}
                             .dump()
                      << "\n";
        } else if (c_gext->parsed()) {
            if (spot < 1) throw ParseError("i must be at least 1");
            GorensteinContext ctx = GorensteinContext::make(in.ring());
            Module g = gext(static_cast<std::size_t>(spot), get_module(in, sM, "M"),
                            get_module(in, sD, "D"), ctx);
            std::cout << "GExt^" << spot << " = " << describe_module(g) << "\n"
                      << dump_module(g) << "\n";
        } else if (c_rel->parsed()) {
            if (spot < 1) throw ParseError("i must be at least 1");
            Module C = get_module(in, sC, "C"), D = get_module(in, sD, "D");
            TestClass F = get_class(in, sF, "F");
            RelativeSubgroup RS =
                right_side ? relative_ext_subgroup_right(static_cast<std::size_t>(spot), C, D, F)
                           : relative_ext_subgroup(static_cast<std::size_t>(spot), C, D, F);
            std::cout << (right_side ? "right" : "left") << " relative subgroup order "
                      << RS.order() << " of " << RS.group.order() << "\n";
            json members = json::array();
            for (const auto& c : RS.members) {
                json t = json::array();
                for (const Int& v : c) t.push_back(v.convert_to<long long>());
                members.push_back(std::move(t));
            }
            std::cout << json{{"group", json::parse(dump_module(RS.group.group))},
                              {"members", members}}
                             .dump()
                      << "\n";
        } else if (c_baer->parsed()) {
            Extension S = get_extension(in, sS, "S"), T = get_extension(in, sT, "T");
            Extension sum = baer_sum(S, T);
            bool split = is_equivalent(sum, Extension::split_extension(sum.quot(), sum.sub()));
            std::cout << "baer sum middle = " << describe_module(sum.middle()) << " ("
                      << (split ? "split" : "nonsplit") << ")\n"
                      << dump_extension(sum) << "\n";
        } else if (c_phi->parsed()) {
            Extension S = get_extension(in, sS, "S");
            ExtGroup G = ext_group(1, S.quot(), S.sub());
            ExtElement e = phi(S, G);
            json coords = json::array();
            for (const Int& v : e.coords) coords.push_back(v.convert_to<long long>());
            std::cout << "class " << coords.dump() << " in " << describe_module(G.group) << "\n";
            std::cout << json{{"coords", coords}, {"cocycle", json::parse(dump_morphism(e.cocycle))}}
                             .dump()
                      << "\n";
        } else if (c_psi->parsed()) {
            ExtGroup G = ext_group(1, get_module(in, sC, "C"), get_module(in, sD, "D"));
            std::vector<Int> coords = parse_coords_arg(sCoords);
            if (coords.size() != G.ngens())
                throw ParseError("coords must have " + std::to_string(G.ngens()) + " entries");
            Extension S = psi(G, coords);
            std::cout << "middle = " << describe_module(S.middle()) << "\n"
                      << dump_extension(S) << "\n";
        } else if (c_hml->parsed()) {
            ChainComplex X = get_complex(in, sX, "X");
            json hs = json::array();
            long lo = have_degree ? degree : X.lo();
            long hi = have_degree ? degree : X.hi();
            for (long k = lo; k <= hi; ++k) {
                Module H = homology(X, k);
                std::cout << "H_" << k << " = " << describe_module(H) << "\n";
                hs.push_back(json::parse(dump_module(H)));
            }
            std::cout << json{{"lo", lo}, {"homology", hs}}.dump() << "\n";
        } else if (c_mem->parsed()) {
            ChainComplex X = get_complex(in, sX, "X");
            TestClass F = get_class(in, sF, "F");
            ComplexClassKind kind;
            if (sKind == "dw")
                kind = ComplexClassKind::DegreewiseF;
            else if (sKind == "cx")
                kind = ComplexClassKind::FComplex;
            else if (sKind == "dg")
                kind = ComplexClassKind::DgF;
            else
                throw ParseError("kind must be dw, cx or dg");
            std::optional<bool> r = class_membership(X, F, kind);
            std::cout << (r.has_value() ? (*r ? "member" : "not a member") : "undecided")
                      << "\n";
            json val = r.has_value() ? json(*r) : json(nullptr);
            std::cout << json{{"kind", sKind}, {"member", val}}.dump() << "\n";
        } else if (c_res->parsed()) {
            Resolution res = free_resolution(get_module(in, sM, "M"), depth);
            std::cout << "free resolution of " << describe_module(res.target) << ":";
            for (const Module& F : res.frees) std::cout << " " << describe_module(F);
            std::cout << "\n";
            json frees = json::array(), maps = json::array();
            for (const Module& F : res.frees) frees.push_back(json::parse(dump_module(F)));
            for (const Morphism& f : res.maps) maps.push_back(json::parse(dump_morphism(f)));
            std::cout << json{{"target", json::parse(dump_module(res.target))},
                              {"frees", frees},
                              {"maps", maps}}
                             .dump()
                      << "\n";
        } else if (c_ver->parsed()) {
            if (instance_path.empty() == fuzz.empty())
                throw ParseError("verify needs exactly one of: instance file, --fuzz seed count");
            return cmd_verify(prop, instance_path, fuzz, in.ring_n, degree, fail_dir);
        }
        return 0;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
