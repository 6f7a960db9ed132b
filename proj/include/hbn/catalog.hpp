#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hbn/term.hpp"

namespace hbn {

/// 2^(2^value(n)) + 1.
Term fermat(const Term& n);
/// 2^value(p) - 1.
Term mersenne(const Term& p);
/// 2^(value(p)-1) * (2^value(p) - 1); requires value(p) >= 2.
Term perfect(const Term& p);

/// Named record numbers, built once per process from their defining
/// shift/exponent formulas. Keys:
///   prime48            57885161 (the exponent itself)
///   mersenne48         2^57885161 - 1
///   perfect48          2^57885160 * (2^57885161 - 1)
///   genFermatPrime     27653 * 2^9167433 + 1
///   cullenPrime        6679881 * 2^6679881 + 1
///   woodallPrime       3752948 * 2^3752948 - 1
///   prothPrime         19249 * 2^13018586 + 1
///   sophieGermainPrime 18543637900515 * 2^666667 - 1
///   twinPrime1/2       3756801695685 * 2^666669 -/+ 1
const std::map<std::string, Term>& catalog_constants();

/// A term folded into a DAG: identical subtrees share one node. Node ids
/// are assigned in first-visit postorder, so children always precede their
/// parents and the root is the last node.
struct Dag {
    struct Edge {
        std::size_t parent;
        std::size_t child;
        std::size_t position;  // 0 is the head counter
    };
    std::vector<Parity3> labels;  // Zero/Odd/Even for E/V/W nodes
    std::vector<Edge> edges;
    std::size_t root = 0;
};

/// Folds identical subtrees together with maximal sharing. Subtrees are
/// keyed by constructor plus child ids, so unequal trees can never merge.
Dag dag_fold(const Term& t);
/// Rebuilds the folded term exactly.
Term dag_unfold(const Dag& d);

struct DagStats {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    Term tsize_of_original;
};
DagStats dag_stats(const Dag& d);

/// Graphviz rendering, deterministic across runs. The empty leaf is
/// labeled "T", other nodes "V"/"W"; edges carry the child position.
std::string dag_to_dot(const Dag& d);

}  // namespace hbn
