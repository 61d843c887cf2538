#pragma once

namespace tdim {

/// Runtime caps for the exponential searches. Every search throws
/// CapExceeded instead of silently running past its cap.
struct Limits {
  int max_order = 24;              // exact metric dimension
  int max_clique_order = 64;       // exact maximum clique
  int max_induced_order = 12;      // induced-subgraph search
  int max_complement_edges = 21;   // exhaustive threshold dimension
  int max_colouring_order = 16;    // exact colouring; greedy above
  long long max_assignment_sets = 200000; // landmark sets tried per size by the assignment search
  int workers = 0;                 // 0 = hardware concurrency
};

} // namespace tdim
