#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "fg/families.hpp"
#include "fg/permgrp.hpp"

namespace fg {
namespace survey {

// Row-major 2x2 matrix over the prime field.
using Mat2 = std::array<int, 4>;

// One representative stabilizer block of a linear class, with the design
// and graph facts needed to audit the table entry.
struct BlockReport {
  std::vector<int> block;  // nonzero-vector positions, sorted
  int line_size = 0;       // block size plus the adjoined origin
  int lambda = 0;
  bool affine_line = false;  // block with 0 is a one-dimensional subspace
  bool connected = false;
};

struct TableRow {
  int line_size = 0;
  int lambda = 0;
  int count = 0;
};

// A transitive linear group on the nonzero vectors of F_p^2 with a normal
// quaternionic or icosahedral core, up to conjugacy in the full linear
// group, together with its aggregated block table.
struct ClassReport {
  gf::i64 order = 0;
  perm::PermGroup group;  // on nonzero vectors, position x*p + y - 1
  std::vector<BlockReport> blocks;
  std::vector<TableRow> rows;  // by (line_size, lambda)
};

struct SurveyReport {
  int p = 0;
  std::vector<ClassReport> classes;  // by (order, row list)
};

// Full pipeline for one odd prime: construct the core groups, close them
// under their normalizers, filter to transitive classes, enumerate block
// subgroups above the point stabilizer, and reduce blocks to normalizer
// orbit representatives.
SurveyReport run_survey(int p);

// The affine closure of a linear class, as an action on all p^2 vectors.
fam::ActionGroup affine_action(int p, const perm::PermGroup& linear);

// Lines "order class_idx line_size lambda count", one per table row,
// classes indexed from 1 in report order.
std::vector<std::string> format_rows(const SurveyReport& r);

// Whitespace-normalized nonblank lines of a stored table.
std::vector<std::string> read_rows(std::istream& in);

}  // namespace survey
}  // namespace fg
