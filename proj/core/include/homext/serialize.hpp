#pragma once

#include <homext/extalg.hpp>

#include <map>
#include <string>

namespace homext {

/* one JSON-compatible text format per object. Shape and reference problems
 * raise ParseError naming the offending field; mathematical validation of
 * the parsed data (d after d nonzero, non-exact extension) keeps raising
 * PreconditionError so the CLI can map the two to different exit codes. */

std::string dump_module(const Module& M);
std::string dump_morphism(const Morphism& f);
std::string dump_complex(const ChainComplex& X);
std::string dump_extension(const Extension& S);
std::string dump_class(const TestClass& F);

/* a bare array is accepted as a factor list: "[2,4]" */
Module parse_module(const std::string& text, const Ring& r);
Morphism parse_morphism(const std::string& text, const Ring& r);
ChainComplex parse_complex(const std::string& text, const Ring& r);
Extension parse_extension(const std::string& text, const Ring& r);
TestClass parse_class(const std::string& text, const Ring& r);

/* named objects over a single ring; a name is usable wherever the object
 * shape is expected, and dangling names are rejected at load */
struct Manifest {
    Ring ring = Ring{2};
    std::map<std::string, Module> modules;
    std::map<std::string, Morphism> morphisms;
    std::map<std::string, ChainComplex> complexes;
    std::map<std::string, Extension> extensions;
    std::map<std::string, TestClass> classes;

    const Module& module_at(const std::string& name) const;
    const Morphism& morphism_at(const std::string& name) const;
    const ChainComplex& complex_at(const std::string& name) const;
    const Extension& extension_at(const std::string& name) const;
    const TestClass& class_at(const std::string& name) const;
};
Manifest parse_manifest(const std::string& text);
/* canonical: sorted names, references inlined; idempotent under reparse */
std::string dump_manifest(const Manifest& m);

}  // namespace homext
