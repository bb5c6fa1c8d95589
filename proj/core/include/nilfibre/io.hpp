#pragma once

/*
  Serialization: JSON forms of diagrams, tableaux, enumeration results,
  polynomials and flow charts, plus run manifests with stable digests.
*/

#include <cstdint>
#include <string>

#include "json.hpp"
#include "nilfibre/component.hpp"
#include "nilfibre/invariant.hpp"
#include "nilfibre/reverse.hpp"
#include "nilfibre/verify.hpp"

namespace nilfibre {

using Json = nlohmann::ordered_json;

Json diagram_json(const Diagram& d);
Json tableau_json(const Tableau& t);
Json red_set_json(const RedSet& rs);
Json coords_json(const std::set<Coord>& coords);
Json component_json(const ComponentTableau& ct);
Json components_json(const ComponentEnumeration& en);
Json reverse_state_json(const ReverseState& rs);
Json polynomial_json(const SparsePolynomial& p);  // sorted monomial list
Json suite_json(const SuiteResult& r);

// The factorisation flow chart of one complete sequence: the branch DAG of
// reverse states with, on each edge, the multilinear factors of the next
// invariant restricted by the excluded roots collected so far; rejected
// branches carry their reason and the Red Set they would have produced.
struct FlowChart {
    struct Node {
        int id = 0;
        int stage = 0;
        RedSet red_set;
        ReverseState state;
    };
    struct Edge {
        int from = 0, to = 0;
        NeighbouringPair pair;
        int choice_col = 0;
        std::vector<std::string> factors;  // rendered polynomials; empty if beyond the symbolic bound
        int factor_count = 0;
    };
    struct Reject {
        int from = 0;
        NeighbouringPair pair;
        int choice_col = 0;
        std::string reason;
        RedSet would_be;
    };
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    std::vector<Reject> rejected;

    std::vector<RedSet> leaf_red_sets() const;  // sorted, deduplicated
};

FlowChart build_flow_chart(DiagramPtr d, const std::vector<NeighbouringPair>& sequence,
                           ShiftMode mode = ShiftMode::Standard, int symbolic_bound = kDefaultSymbolicBound);
Json flow_chart_json(const FlowChart& fc);

// "C1,C3;C2,C4" -> pairs of the diagram, validated.
std::optional<std::vector<NeighbouringPair>> parse_sequence(const Diagram& d, const std::string& text);

std::uint64_t fnv1a(const std::string& data);
std::string hex64(std::uint64_t v);

struct RunManifest {
    std::string composition;
    std::string command;
    std::uint64_t seed = 0;
    std::vector<std::string> flags;
    std::string version;
    std::string timestamp;
    std::map<std::string, std::string> output_digests;  // filename -> fnv64 hex
    Json to_json() const;
};

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace nilfibre
