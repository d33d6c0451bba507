#pragma once

#include <string>

#include "characters.hpp"
#include "group_algebra.hpp"
#include "ot_algebra.hpp"

namespace otwb {

// {n, terms: [{word, num, den}]}, words in one-line form.
std::string ga_to_json(const GroupAlgebraElement& e);
GroupAlgebraElement ga_from_json(const std::string& text);

// Rows = partitions (dot-separated parts), columns = classes.
std::string character_table_csv(int n);

// {partition: multiplicity} object.
std::string decomposition_json(const CharacterVector& a);

// {n, algebra, degree, basis: [monomials], character: {partition: value}}.
std::string ot_degree_json(const NormalFormTable& table, int degree, const CharacterVector& chi,
                           const std::string& algebra_name);

}  // namespace otwb
