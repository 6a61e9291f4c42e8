#pragma once

#include <optional>
#include <string>
#include <vector>

#include "odrc/graph.hpp"

namespace odrc {

struct GraphSummary {
  int n = 0;
  int m = 0;
  int rad = kInf;  // kInf when disconnected
  int diam = kInf;
  int eta = kInf;  // kInf when bridged
  int girth = kInf;
  int min_degree = 0;
  bool bipartite = false;
};

GraphSummary summarize(const Graph& g, int threads = 1);

enum class Hypotheses { hold, fail, asserted };
enum class Status { pass, fail, skipped };

struct TheoremEntry {
  std::string name;
  Hypotheses hypotheses = Hypotheses::fail;
  std::optional<long long> bound;
  std::optional<long long> measured;  // only when a construction ran
  Status status = Status::skipped;
  std::string note;
};

struct TheoremReport {
  GraphSummary graph;
  std::vector<TheoremEntry> theorems;

  // No entry failed (skipped entries are neither pass nor fail).
  bool ok() const;
};

struct ReferenceBounds {
  long long quadratic_radius = 0;    // rad^2 + rad
  long long quadratic_diameter = 0;  // 2rad^2 + 2rad
  int orientation_radius = 0;        // sum min{2i, eta-1}
  int orientation_diameter = 0;
  int color_bound = 0;               // sum min{2i+1, eta}
  std::optional<int> zeta;           // only when n <= 14
  std::optional<int> isometric_color_bound;  // sum min{2i+1, zeta}
};

// Throws PreconditionError on disconnected or bridged input.
ReferenceBounds reference_bounds(const Graph& g, int threads = 1);

// Dense bipartite degree condition: radius <= 3, eta <= 4, oriented radius
// <= 9, colors <= 12.
std::vector<TheoremEntry> check_bipartite_theorem(const Graph& g, int threads = 1);

// Neighborhood growth with the given k (k >= 2), then the minimum degree
// > n/2 case.
std::vector<TheoremEntry> check_general_theorems(const Graph& g, int k,
                                                 int threads = 1);

// Smallest k >= 2 with k < girth/2 and d(d-1)^(k-1) > n/2 - 1 (d the
// minimum degree).
std::vector<TheoremEntry> check_girth_corollary(const Graph& g, int threads = 1);

// Face-length and edge-transitive bounds. Both hypotheses are taken on the
// caller's word; entries are skipped when neither is given.
std::vector<TheoremEntry> evaluate_asserted_bounds(const Graph& g,
                                                   std::optional<int> face_len,
                                                   bool edge_transitive,
                                                   int threads = 1);

struct ReportOptions {
  int k = 2;
  std::optional<int> face_len;
  bool edge_transitive = false;
  int threads = 1;
};

// Every entry above plus the layered orientation and coloring bounds and the
// reference comparisons.
TheoremReport full_report(const Graph& g, const ReportOptions& options = {});

std::string to_string(Hypotheses h);
std::string to_string(Status s);

// Plain text table, one row per entry.
std::string format_report_table(const TheoremReport& report);

}  // namespace odrc
