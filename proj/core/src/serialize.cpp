#include <homext/serialize.hpp>

#include <json.hpp>

#include <cctype>
#include <functional>
#include <utility>

namespace homext {

namespace {

using nlohmann::json;

Int to_int(const json& v, const std::string& field) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        std::size_t k = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (k == s.size()) throw ParseError(field + " is not an integer");
        for (; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k])))
                throw ParseError(field + " is not an integer");
        return Int(s);
    }
    throw ParseError(field + " must be an integer");
}

long to_long(const json& v, const std::string& field) {
    if (!v.is_number_integer()) throw ParseError(field + " must be an integer");
    return v.get<long>();
}

/* everything serialized stays reduced below N, so this never truncates */
long long small(const Int& v) { return v.convert_to<long long>(); }

json parse_text(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(what + " is not valid JSON");
    return j;
}

json jmodule(const Module& M) {
    json a = json::array();
    for (const Int& f : M.factors) a.push_back(small(f));
    return json{{"factors", a}};
}

Module module_of(const json& j, const Ring& r, const std::string& field) {
    const json* a = nullptr;
    if (j.is_array()) {
        a = &j;
    } else if (j.is_object()) {
        if (!j.contains("factors")) throw ParseError(field + ".factors missing");
        a = &j.at("factors");
        if (!a->is_array()) throw ParseError(field + ".factors must be an array");
    } else {
        throw ParseError(field + " must be a module");
    }
    std::vector<Int> fs;
    for (std::size_t i = 0; i < a->size(); ++i)
        fs.push_back(to_int((*a)[i], field + ".factors[" + std::to_string(i) + "]"));
    try {
        return Module::make(r, std::move(fs));
    } catch (const PreconditionError& e) {
        throw ParseError(field + ": " + e.what());
    }
}

json jmatrix(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(small(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_of(const json& j, std::size_t rows, std::size_t cols,
                    const std::string& field) {
    if (!j.is_array() || j.size() != rows)
        throw ParseError(field + " must have " + std::to_string(rows) + " rows");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError(field + "[" + std::to_string(i) + "] must have " +
                             std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = to_int(
                row[c], field + "[" + std::to_string(i) + "][" + std::to_string(c) + "]");
    }
    return m;
}

/* resolvers let manifest names stand in for inline objects */
using ModuleResolver = std::function<Module(const json&, const std::string&)>;
using MorphismResolver = std::function<Morphism(const json&, const std::string&)>;

json jmorphism(const Morphism& f) {
    return json{{"from", jmodule(f.src)}, {"to", jmodule(f.dst)}, {"matrix", jmatrix(f.mat)}};
}

Morphism morphism_of(const json& j, const std::string& field, const ModuleResolver& mod) {
    if (!j.is_object()) throw ParseError(field + " must be a morphism");
    for (const char* key : {"from", "to", "matrix"})
        if (!j.contains(key)) throw ParseError(field + "." + key + " missing");
    Module src = mod(j.at("from"), field + ".from");
    Module dst = mod(j.at("to"), field + ".to");
    IntMatrix m = matrix_of(j.at("matrix"), dst.rank(), src.rank(), field + ".matrix");
    try {
        return Morphism::make(std::move(src), std::move(dst), std::move(m));
    } catch (const std::logic_error& e) {
        throw ParseError(field + ".matrix: " + e.what());
    }
}

json jcomplex(const ChainComplex& X) {
    json mods = json::array();
    json diffs = json::array();
    if (!X.is_zero()) {
        for (long m = X.lo(); m <= X.hi(); ++m) mods.push_back(jmodule(X.at(m)));
        for (long m = X.lo() + 1; m <= X.hi(); ++m) diffs.push_back(jmatrix(X.diff(m).mat));
    }
    long lo = X.is_zero() ? 0 : X.lo();
    long hi = X.is_zero() ? -1 : X.hi();
    return json{{"lo", lo}, {"hi", hi}, {"modules", mods}, {"diffs", diffs}};
}

/* diffs[i] maps degree lo+i+1 to degree lo+i; d after d = 0 is validated by
 * the complex constructor and stays a precondition, not a parse error */
ChainComplex chain_of(const json& j, const Ring& r, const std::string& field,
                        const ModuleResolver& mod) {
    if (!j.is_object()) throw ParseError(field + " must be a complex");
    for (const char* key : {"lo", "hi", "modules", "diffs"})
        if (!j.contains(key)) throw ParseError(field + "." + key + " missing");
    long lo = to_long(j.at("lo"), field + ".lo");
    long hi = to_long(j.at("hi"), field + ".hi");
    const json& jm = j.at("modules");
    const json& jd = j.at("diffs");
    if (!jm.is_array() || (hi < lo ? !jm.empty() : jm.size() != static_cast<std::size_t>(hi - lo + 1)))
        throw ParseError(field + ".modules must list one module per degree");
    const std::size_t want_diffs = jm.empty() ? 0 : jm.size() - 1;
    if (!jd.is_array() || jd.size() != want_diffs)
        throw ParseError(field + ".diffs must list one matrix per adjacent pair");
    std::vector<Module> mods;
    for (std::size_t i = 0; i < jm.size(); ++i)
        mods.push_back(mod(jm[i], field + ".modules[" + std::to_string(i) + "]"));
    std::vector<Morphism> diffs;
    for (std::size_t i = 0; i + 1 < mods.size(); ++i) {
        IntMatrix m = matrix_of(jd[i], mods[i].rank(), mods[i + 1].rank(),
                                field + ".diffs[" + std::to_string(i) + "]");
        try {
            diffs.push_back(Morphism::make(mods[i + 1], mods[i], std::move(m)));
        } catch (const std::logic_error& e) {
            throw ParseError(field + ".diffs[" + std::to_string(i) + "]: " + e.what());
        }
    }
    return ChainComplex::make(r, lo, std::move(mods), std::move(diffs));
}

json jextension(const Extension& S) {
    json maps = json::array();
    for (const Morphism& f : S.maps) maps.push_back(jmorphism(f));
    return json{{"degree", S.degree()}, {"maps", maps}};
}

/* non-exact data passes parsing and fails the extension constructor, which
 * is the documented precondition path */
Extension extension_of(const json& j, const std::string& field, const MorphismResolver& mor) {
    if (!j.is_object()) throw ParseError(field + " must be an extension");
    for (const char* key : {"degree", "maps"})
        if (!j.contains(key)) throw ParseError(field + "." + key + " missing");
    long degree = to_long(j.at("degree"), field + ".degree");
    const json& jm = j.at("maps");
    if (!jm.is_array() || jm.empty())
        throw ParseError(field + ".maps must be a nonempty array");
    if (degree < 1 || jm.size() != static_cast<std::size_t>(degree) + 1)
        throw ParseError(field + ".degree must match the number of maps minus one");
    std::vector<Morphism> maps;
    for (std::size_t i = 0; i < jm.size(); ++i)
        maps.push_back(mor(jm[i], field + ".maps[" + std::to_string(i) + "]"));
    return Extension::make(std::move(maps));
}

json jclass(const TestClass& F) {
    json gens = json::array();
    for (const Module& M : F.generators) gens.push_back(jmodule(M));
    return json{{"generators", gens}};
}

TestClass class_of(const json& j, const Ring& r, const std::string& field,
                   const ModuleResolver& mod) {
    if (!j.is_object() || !j.contains("generators"))
        throw ParseError(field + ".generators missing");
    const json& jg = j.at("generators");
    if (!jg.is_array()) throw ParseError(field + ".generators must be an array");
    std::vector<Module> gens;
    for (std::size_t i = 0; i < jg.size(); ++i)
        gens.push_back(mod(jg[i], field + ".generators[" + std::to_string(i) + "]"));
    return TestClass::make(r, std::move(gens));
}

ModuleResolver inline_only(const Ring& r) {
    return [&r](const json& v, const std::string& field) {
        if (v.is_string()) throw ParseError(field + ": names require a manifest");
        return module_of(v, r, field);
    };
}

}  // namespace

std::string dump_module(const Module& M) { return jmodule(M).dump(); }
std::string dump_morphism(const Morphism& f) { return jmorphism(f).dump(); }
std::string dump_complex(const ChainComplex& X) { return jcomplex(X).dump(); }
std::string dump_extension(const Extension& S) { return jextension(S).dump(); }
std::string dump_class(const TestClass& F) { return jclass(F).dump(); }

Module parse_module(const std::string& text, const Ring& r) {
    return module_of(parse_text(text, "module"), r, "module");
}

Morphism parse_morphism(const std::string& text, const Ring& r) {
    return morphism_of(parse_text(text, "morphism"), "morphism", inline_only(r));
}

ChainComplex parse_complex(const std::string& text, const Ring& r) {
    return chain_of(parse_text(text, "complex"), r, "complex", inline_only(r));
}

Extension parse_extension(const std::string& text, const Ring& r) {
    ModuleResolver mod = inline_only(r);
    return extension_of(parse_text(text, "extension"), "extension",
                        [&](const json& v, const std::string& field) {
                            if (v.is_string())
                                throw ParseError(field + ": names require a manifest");
                            return morphism_of(v, field, mod);
                        });
}

TestClass parse_class(const std::string& text, const Ring& r) {
    return class_of(parse_text(text, "class"), r, "class", inline_only(r));
}

const Module& Manifest::module_at(const std::string& name) const {
    auto it = modules.find(name);
    if (it == modules.end()) throw ParseError("unknown module '" + name + "'");
    return it->second;
}
const Morphism& Manifest::morphism_at(const std::string& name) const {
    auto it = morphisms.find(name);
    if (it == morphisms.end()) throw ParseError("unknown morphism '" + name + "'");
    return it->second;
}
const ChainComplex& Manifest::complex_at(const std::string& name) const {
    auto it = complexes.find(name);
    if (it == complexes.end()) throw ParseError("unknown complex '" + name + "'");
    return it->second;
}
const Extension& Manifest::extension_at(const std::string& name) const {
    auto it = extensions.find(name);
    if (it == extensions.end()) throw ParseError("unknown extension '" + name + "'");
    return it->second;
}
const TestClass& Manifest::class_at(const std::string& name) const {
    auto it = classes.find(name);
    if (it == classes.end()) throw ParseError("unknown class '" + name + "'");
    return it->second;
}

Manifest parse_manifest(const std::string& text) {
    json j = parse_text(text, "manifest");
    if (!j.is_object()) throw ParseError("manifest must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "ring" && key != "modules" && key != "morphisms" && key != "complexes" &&
            key != "extensions" && key != "classes")
            throw ParseError("manifest." + key + " is not a recognized section");
    }
    if (!j.contains("ring")) throw ParseError("manifest.ring missing");
    Manifest m;
    try {
        m.ring = Ring::make(to_int(j.at("ring"), "manifest.ring"));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("manifest.ring: ") + e.what());
    }

    auto section = [&](const char* name) -> json {
        if (!j.contains(name)) return json::object();
        const json& s = j.at(name);
        if (!s.is_object())
            throw ParseError(std::string("manifest.") + name + " must be an object");
        return s;
    };
    ModuleResolver mod = [&m](const json& v, const std::string& field) {
        if (v.is_string()) {
            const std::string name = v.get<std::string>();
            auto it = m.modules.find(name);
            if (it == m.modules.end())
                throw ParseError(field + ": unknown module '" + name + "'");
            return it->second;
        }
        return module_of(v, m.ring, field);
    };
    MorphismResolver mor = [&m, &mod](const json& v, const std::string& field) {
        if (v.is_string()) {
            const std::string name = v.get<std::string>();
            auto it = m.morphisms.find(name);
            if (it == m.morphisms.end())
                throw ParseError(field + ": unknown morphism '" + name + "'");
            return it->second;
        }
        return morphism_of(v, field, mod);
    };

    const json s_mod = section("modules"), s_cls = section("classes"),
               s_mor = section("morphisms"), s_cx = section("complexes"),
               s_ext = section("extensions");
    for (const auto& [name, v] : s_mod.items())
        m.modules.emplace(name, module_of(v, m.ring, "modules." + name));
    for (const auto& [name, v] : s_cls.items())
        m.classes.emplace(name, class_of(v, m.ring, "classes." + name, mod));
    for (const auto& [name, v] : s_mor.items())
        m.morphisms.emplace(name, morphism_of(v, "morphisms." + name, mod));
    for (const auto& [name, v] : s_cx.items())
        m.complexes.emplace(name, chain_of(v, m.ring, "complexes." + name, mod));
    for (const auto& [name, v] : s_ext.items())
        m.extensions.emplace(name, extension_of(v, "extensions." + name, mor));
    return m;
}

std::string dump_manifest(const Manifest& m) {
    json j;
    j["ring"] = small(m.ring.N);
    json mods = json::object();
    for (const auto& [name, v] : m.modules) mods[name] = jmodule(v);
    json mors = json::object();
    for (const auto& [name, v] : m.morphisms) mors[name] = jmorphism(v);
    json cxs = json::object();
    for (const auto& [name, v] : m.complexes) cxs[name] = jcomplex(v);
    json exts = json::object();
    for (const auto& [name, v] : m.extensions) exts[name] = jextension(v);
    json cls = json::object();
    for (const auto& [name, v] : m.classes) cls[name] = jclass(v);
    if (!mods.empty()) j["modules"] = std::move(mods);
    if (!mors.empty()) j["morphisms"] = std::move(mors);
    if (!cxs.empty()) j["complexes"] = std::move(cxs);
    if (!exts.empty()) j["extensions"] = std::move(exts);
    if (!cls.empty()) j["classes"] = std::move(cls);
    return j.dump(2) + "\n";
}

}  // namespace homext
