#include "hbn/catalog.hpp"

#include <cstdint>
#include <sstream>
#include <unordered_map>

#include "hbn/arith.hpp"
#include "hbn/convert.hpp"

namespace hbn {

Term fermat(const Term& n) { return successor(exp2(exp2(n))); }

Term mersenne(const Term& p) { return predecessor(exp2(p)); }

Term perfect(const Term& p) {
    if (p.is_zero() || p == Term::v({}, {}))
        throw domain_error("perfect needs an exponent of at least 2");
    Term q = predecessor(predecessor(p));
    return successor(Term::v(q, {q}));
}

const std::map<std::string, Term>& catalog_constants() {
    static const std::map<std::string, Term> table = [] {
        std::map<std::string, Term> m;
        Term prime48 = term_of_u64(57885161);
        m["prime48"] = prime48;
        m["mersenne48"] = mersenne(prime48);
        m["perfect48"] = perfect(prime48);
        m["genFermatPrime"] = successor(leftshift_by(term_of_u64(9167433), term_of_u64(27653)));
        m["cullenPrime"] = [] {
            Term n = term_of_u64(6679881);
            return successor(leftshift_by(n, n));
        }();
        m["woodallPrime"] = [] {
            Term n = term_of_u64(3752948);
            return predecessor(leftshift_by(n, n));
        }();
        m["prothPrime"] = successor(leftshift_by(term_of_u64(13018586), term_of_u64(19249)));
        m["sophieGermainPrime"] =
            predecessor(leftshift_by(term_of_u64(666667), term_of_u64(18543637900515)));
        Term twin_mid = leftshift_by(term_of_u64(666669), term_of_u64(3756801695685));
        m["twinPrime1"] = predecessor(twin_mid);
        m["twinPrime2"] = successor(twin_mid);
        return m;
    }();
    return table;
}

namespace {

struct NodeKey {
    bool odd;
    std::vector<std::size_t> children;

    bool operator==(const NodeKey&) const = default;
};

struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const {
        std::size_t h = k.odd ? 0x9e3779b97f4a7c15ull : 0x517cc1b727220a95ull;
        for (std::size_t c : k.children) h = h * 1099511628211ull ^ (c + 0x2545f4914f6cdd1dull);
        return h;
    }
};

}  // namespace

Dag dag_fold(const Term& t) {
    Dag dag;
    std::unordered_map<NodeKey, std::size_t, NodeKeyHash> interned;
    std::size_t leaf_id = SIZE_MAX;

    // Iterative postorder with an explicit id memo per visited term value.
    struct Frame {
        Term term;
        std::size_t next_child = 0;
        std::vector<std::size_t> child_ids;
    };

    auto intern_leaf = [&]() {
        if (leaf_id == SIZE_MAX) {
            leaf_id = dag.labels.size();
            dag.labels.push_back(Parity3::Zero);
        }
        return leaf_id;
    };

    std::vector<Frame> stack;
    std::size_t root_id;
    if (t.is_zero()) {
        root_id = intern_leaf();
    } else {
        stack.push_back(Frame{t, 0, {}});
        root_id = SIZE_MAX;
        std::size_t finished_id = SIZE_MAX;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (finished_id != SIZE_MAX) {
                f.child_ids.push_back(finished_id);
                finished_id = SIZE_MAX;
            }
            auto cs = f.term.counters();
            if (f.next_child < cs.size()) {
                const Term& child = cs[f.next_child++];
                if (child.is_zero()) {
                    f.child_ids.push_back(intern_leaf());
                } else {
                    stack.push_back(Frame{child, 0, {}});
                }
                continue;
            }
            NodeKey key{f.term.is_odd(), f.child_ids};
            auto [it, inserted] = interned.try_emplace(key, dag.labels.size());
            if (inserted) {
                std::size_t id = it->second;
                dag.labels.push_back(f.term.is_odd() ? Parity3::Odd : Parity3::Even);
                for (std::size_t pos = 0; pos < f.child_ids.size(); ++pos)
                    dag.edges.push_back({id, f.child_ids[pos], pos});
            }
            finished_id = it->second;
            stack.pop_back();
        }
        root_id = finished_id;
    }
    dag.root = root_id;
    return dag;
}

Term dag_unfold(const Dag& d) {
    std::vector<std::vector<std::size_t>> children(d.labels.size());
    for (const auto& e : d.edges) {
        auto& row = children[e.parent];
        if (row.size() <= e.position) row.resize(e.position + 1, SIZE_MAX);
        row[e.position] = e.child;
    }
    // Postorder ids mean every child id is smaller than its parent's.
    std::vector<Term> built(d.labels.size());
    for (std::size_t id = 0; id < d.labels.size(); ++id) {
        if (d.labels[id] == Parity3::Zero) continue;
        std::vector<Term> cs;
        cs.reserve(children[id].size());
        for (std::size_t c : children[id]) cs.push_back(built[c]);
        built[id] = detail::make_term(d.labels[id] == Parity3::Odd, std::move(cs));
    }
    return built[d.root];
}

DagStats dag_stats(const Dag& d) {
    return {d.labels.size(), d.edges.size(), tsize(dag_unfold(d))};
}

std::string dag_to_dot(const Dag& d) {
    std::ostringstream out;
    out << "digraph term {\n";
    out << "  node [shape=circle];\n";
    for (std::size_t id = 0; id < d.labels.size(); ++id) {
        const char* label = d.labels[id] == Parity3::Zero ? "T"
                            : d.labels[id] == Parity3::Odd ? "V"
                                                           : "W";
        out << "  n" << id << " [label=\"" << label << "\"];\n";
    }
    for (const auto& e : d.edges)
        out << "  n" << e.parent << " -> n" << e.child << " [label=\"" << e.position << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace hbn
