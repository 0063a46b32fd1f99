#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "virtstring/based_matrix.hpp"

namespace vstr {

constexpr int kDefaultMaxFillingSize = 16;

struct SimpleFilling {
  std::vector<std::vector<int>> blocks;  // includes the block {s}
};

IntMatrix filling_matrix(const BasedMatrix& t, const SimpleFilling& f);

struct SigmaResult {
  int sigma = 0;
  SimpleFilling filling;  // a filling realizing the minimum
};

SigmaResult sigma(const BasedMatrix& t, int max_size = kDefaultMaxFillingSize);
std::optional<SimpleFilling> hyperbolic_certificate(const BasedMatrix& t, int max_size = kDefaultMaxFillingSize);
bool is_hyperbolic(const BasedMatrix& t, int max_size = kDefaultMaxFillingSize);

// vectors over the joint basis: matrix k occupies [offset_k, offset_k + size_k)
struct TupleFilling {
  std::vector<int> offsets;
  std::vector<std::vector<long long>> vectors;
};

IntMatrix tuple_filling_matrix(const std::vector<BasedMatrix>& ts, const TupleFilling& f);
bool is_valid_tuple_filling(const std::vector<BasedMatrix>& ts, const TupleFilling& f);

struct TupleSigmaResult {
  int sigma = 0;
  TupleFilling filling;
};

TupleSigmaResult tuple_sigma_upper(const std::vector<BasedMatrix>& ts, int coeff_bound,
                                   int max_size = kDefaultMaxFillingSize, long long node_budget = 20'000'000);

enum class CobordismStatus { Cobordant, Unknown };
struct CobordismResult {
  CobordismStatus status = CobordismStatus::Unknown;
  TupleFilling certificate;  // filling of (T1, -T2) with zero matrix
};
CobordismResult cobordant_matrices(const BasedMatrix& t1, const BasedMatrix& t2, int coeff_bound,
                                   int max_size = kDefaultMaxFillingSize, long long node_budget = 20'000'000);

struct ObstructionReport {
  bool not_slice = false;
  std::string witness;
  std::vector<std::pair<std::string, std::string>> checked;  // invariant name, value
};
ObstructionReport slice_obstruction(const VirtualString& s, int cover_depth, int r_max,
                                    int max_size = kDefaultMaxFillingSize);

VirtualString alpha_h(const VirtualString& s, int p, const std::vector<int>& h);

enum class ScanVerdict { NotSlice, NoObstructionFound, BudgetExceeded };
struct ScanResult {
  ScanVerdict verdict = ScanVerdict::NoObstructionFound;
  long long lagrangians = 0;
  long long nodes = 0;
  std::vector<std::vector<int>> passing_basis;  // basis of an unobstructed Lagrangian, if found
};
ScanResult lagrangian_scan(const VirtualString& s, int p, long long budget = 100000);

std::string to_string(ScanVerdict v);

}  // namespace vstr
