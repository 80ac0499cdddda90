#pragma once

#include <string>
#include <string_view>

#include "scarf/fspp.hpp"
#include "scarf/kernels.hpp"
#include "scarf/matchings.hpp"
#include "scarf/solver.hpp"

/// JSON file formats. Rationals are bare integers or "p/q" strings in lowest
/// terms; column, row, edge and path indices are 1-based. Writers emit keys
/// in a fixed order so equal values give identical bytes.
namespace scarf::io {

/// Reads a whole file; "-" means standard input.
std::string read_text(const std::string& path);
/// Writes a whole file; "-" means standard output.
void write_text(const std::string& path, std::string_view text);

ScarfInstance parse_scarf_instance(std::string_view json);
std::string write_scarf_instance(const ScarfInstance& inst);

/// {"J":[...], "alpha":[...], "witness":{"col":row}}; witness is optional.
ScarfSolution parse_scarf_solution(std::string_view json);
std::string write_scarf_solution(const ScarfSolution& sol);

/// {"vertices":[...], "arcs":[[u,v],...]}; vertex labels may be numbers or strings.
kernels::Digraph parse_digraph(std::string_view json);
std::string write_digraph(const kernels::Digraph& d);

/// {"f":{label:value}}
kernels::KernelFunction parse_kernel(std::string_view json, const kernels::Digraph& d);
std::string write_kernel(const kernels::Digraph& d, const kernels::KernelFunction& f);

/// {"vertices":[...], "edges":[[...],...], "orders":{label:[edge, ...]}} with
/// each order listing 1-based edge indices from least to most preferred.
matchings::HypergraphPrefSystem parse_hypergraph(std::string_view json);
std::string write_hypergraph(const matchings::HypergraphPrefSystem& h);

/// {"w":[...]} aligned with the edge list.
matchings::FractionalMatching parse_matching(std::string_view json, const matchings::HypergraphPrefSystem& h);
std::string write_matching(const matchings::FractionalMatching& w);

/// {"nodes":[...], "dest":label, "edges":[[a,b],...],
///  "paths":{label:[{"path":[...], "rank":k}, ...]}}
fspp::FsppInstance parse_fspp(std::string_view json);
std::string write_fspp(const fspp::FsppInstance& inst);

/// {"w":{"label/pathIndex":value}}; omitted paths weigh 0.
fspp::FsppWeights parse_fspp_weights(std::string_view json, const fspp::FsppInstance& inst);
std::string write_fspp_weights(const fspp::FsppInstance& inst, const fspp::FsppWeights& w);

/// What kind of document a JSON file holds, judged by its keys.
enum class DocumentKind { ScarfInstance, ScarfSolution, Digraph, Kernel, Hypergraph, Matching, Fspp, FsppWeights, Unknown };
DocumentKind detect(std::string_view json);

}  // namespace scarf::io
