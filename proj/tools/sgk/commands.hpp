#pragma once

#include "common.hpp"

namespace sgk::cli {

int run_group(const Options& opt);
int run_cosetgraph(const Options& opt);
int run_orbitals(const Options& opt);
int run_blocks(const Options& opt);
int run_lattice(const Options& opt);
int run_verify(const Options& opt);
int run_quotient(const Options& opt);
int run_design(const Options& opt);
int run_threearc(const Options& opt);
int run_biggs(const Options& opt);
int run_subgraph_graph(const Options& opt);
int run_extend(const Options& opt);

}  // namespace sgk::cli
