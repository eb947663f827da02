#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "borelres/cell_complex.hpp"
#include "borelres/monomial.hpp"
#include "borelres/resolution.hpp"

namespace borelres {

using Json = nlohmann::ordered_json;

/**
 * Complex as {"vars", "vertices": [{"id", "label"}], "cells": [{"id", "dim",
 * "vertices", "label", "facets": [[id, sign]]}]} in canonical order, labels
 * in x<i> form. Signs are 0 when no incidence function is assigned.
 */
Json complex_to_json(const LabeledComplex& x);

/// Rejects schema violations, duplicate vertex labels, dangling or forward facet
/// references, wrong labels and diamond failures with std::invalid_argument.
LabeledComplex complex_from_json(const Json& j);

std::string export_json(const LabeledComplex& x);
LabeledComplex import_json(std::string_view text);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

std::string indexed(const Monomial& m);

struct IdealSpec {
    enum class Kind { Borel, Mono };
    Kind kind = Kind::Borel;
    std::vector<Monomial> gens;
};

/// `borel: m1, m2, ...`, `mono: m1, m2, ...`, or a bare list (Borel sense).
IdealSpec parse_ideal_spec(std::string_view text, std::size_t n);

Json report_to_json(const VerificationReport& report);

}  // namespace borelres
