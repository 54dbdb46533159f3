#include "sepkit/json_io.hpp"

namespace sepkit {

namespace {

Json edge_array(const EdgeSet& edges) {
    Json arr = Json::array();
    for (auto [u, v] : edges) arr.push_back(Json::array({u, v}));
    return arr;
}

}  // namespace

Json to_json(const StructuralProfile& p) {
    return Json{{"is_connected", p.is_connected},
                {"is_tree", p.is_tree},
                {"is_complete", p.is_complete},
                {"has_triangle", p.has_triangle},
                {"vertex_connectivity", p.vertex_connectivity},
                {"degree_sequence", p.degree_sequence}};
}

Json to_json(const VertexSeparatorRecord& rec) {
    return Json{{"pair", Json::array({rec.a, rec.b})},
                {"S", rec.separator},
                {"minimal", rec.is_minimal},
                {"stable", rec.is_stable},
                {"clique", rec.is_clique}};
}

Json to_json(const EdgeSeparatorRecord& rec) {
    return Json{{"pair", Json::array({rec.a, rec.b})},
                {"cut", edge_array(rec.cut)},
                {"minimal", rec.is_minimal},
                {"matching", rec.is_matching}};
}

Json to_json(const OneChordWitness& w) {
    return Json{{"kind", "one_chord"},
                {"cycle", w.cycle},
                {"chord", Json::array({w.chord.first, w.chord.second})}};
}

Json to_json(const InducedCycleWitness& w) {
    return Json{{"kind", "induced_cycle"}, {"cycle", w.cycle}};
}

Json to_json(const ContractibilityReport& rep) {
    Json blocking = Json::array();
    for (const auto& [edge, sep] : rep.blocking_separators)
        blocking.push_back(Json{{"edge", Json::array({edge.first, edge.second})},
                                {"separator", sep}});
    return Json{{"k", rep.k},
                {"contractible", edge_array(rep.contractible)},
                {"non_contractible", edge_array(rep.non_contractible)},
                {"blocking", blocking}};
}

Json to_json(const ReductionOutput& r) {
    Json gadgets = Json::array();
    for (const auto& [edge, path] : r.gadgets)
        gadgets.push_back(Json{{"edge", Json::array({edge.first, edge.second})},
                               {"path", path}});
    return Json{{"k", r.k},
                {"source", format_graph(r.source)},
                {"target", format_graph(r.target)},
                {"gadgets", gadgets}};
}

Json to_json(const ReductionCheck& c) {
    return Json{{"k", c.k}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"consistent", c.consistent}};
}

Json to_json(const Report& rep) {
    Json failures = Json::array();
    for (const auto& f : rep.failures)
        failures.push_back(Json{{"graph", f.graph}, {"detail", f.detail}});
    Json timings = Json::object();
    for (const auto& [key, ms] : rep.timings_ms) timings[key] = ms;
    return Json{{"suite", rep.suite},
                {"seed", rep.seed},
                {"instances_checked", rep.instances_checked},
                {"failures", failures},
                {"timings", timings},
                {"verdict", rep.pass() ? "pass" : "fail"}};
}

Json strip_timings(Json report) {
    report.erase("timings");
    return report;
}

}  // namespace sepkit
