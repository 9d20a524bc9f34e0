#ifndef TSIH_JSON_IO_HPP
#define TSIH_JSON_IO_HPP

#include "tsih/cochain.hpp"
#include "tsih/simplicial.hpp"
#include "tsih/ts_ih.hpp"

namespace tsih {

// Parsers take whole JSON documents as text and throw ParseError on
// malformed input or ValidationError on well-formed but inconsistent data.

PrimeSet prime_set_from_json(const std::string& text);
FgAbGroup group_from_json(const std::string& text);
GroupHom hom_from_json(const std::string& text);
CochainComplex complex_from_json(const std::string& text);
SimplicialComplex triangulation_from_json(const std::string& text);
LesPackage package_from_json(const std::string& text);
TsPerversity perversity_from_json(const std::string& text);
std::vector<LinkStratum> link_strata_from_json(const std::string& text);

std::string to_json(const PrimeSet& s);
std::string to_json(const FgAbGroup& g);
std::string to_json(const GroupHom& h);
std::string to_json(const CochainComplex& c);
std::string to_json(const SimplicialComplex& k);
std::string to_json(const LesPackage& pkg);
std::string to_json(const TsPerversity& p);
std::string to_json(const std::vector<LinkStratum>& links);
std::string to_json(const TsIhResult& r);
std::string to_json(const DualityReport& r);
std::string to_json(const ConditionReport& r);

// What a top-level input document describes, judged by its keys.
enum class InputKind { Triangulation, Package, Complex, Strata };

InputKind sniff_input(const std::string& text);

}  // namespace tsih

#endif
