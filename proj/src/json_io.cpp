#include "oresme/json_io.hpp"

#include <cmath>

namespace oresme {

Json json_of(const Rational& r) {
    return r.str();
}

Json json_of(const LaurentPoly& p) {
    Json terms = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        terms.push_back(Json::array({it->first, it->second.str()}));
    }
    return terms;
}

Json json_of(const RationalFunction& f) {
    Json j;
    j["num"] = json_of(f.num());
    j["den"] = json_of(f.den());
    return j;
}

Json json_of(const Witness& w) {
    Json params;
    for (const auto& [name, value] : w.params) {
        params[name] = value;
    }
    Json j;
    j["params"] = std::move(params);
    j["lhs"] = json_of(w.lhs);
    j["rhs"] = json_of(w.rhs);
    return j;
}

Json json_of(const IdentityReport& r) {
    Json j;
    j["id"] = r.id;
    j["sweep"] = r.sweep;
    j["verdict"] = verdict_name(r.verdict);
    j["expected"] = expected_name(r.expected);
    j["unexpected"] = r.unexpected;
    j["vacuous"] = r.vacuous;
    j["checked"] = r.checked;
    j["failures"] = r.failures;
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) {
        witnesses.push_back(json_of(w));
    }
    j["witnesses"] = std::move(witnesses);
    return j;
}

Json json_of(const SequenceTable& t) {
    Json rows = Json::array();
    for (const auto& row : t.entries) {
        Json r;
        r["n"] = row.index;
        r["poly"] = json_of(row.poly);
        rows.push_back(std::move(r));
    }
    Json j;
    j["provenance"] = provenance_name(t.provenance);
    j["derivative"] = t.derivative;
    j["rows"] = std::move(rows);
    return j;
}

Json json_float(double v) {
    if (std::isnan(v)) {
        return nullptr;
    }
    return v;
}

Json json_of(const ConvergenceTrace& t) {
    Json j;
    j["x"] = t.x_str;
    j["verdict"] = trace_verdict_name(t.verdict);
    j["burn_in"] = t.burn_in;
    j["observed_limit"] = json_float(t.observed_limit);
    j["flagged"] = t.flagged;
    j["note"] = t.note;
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json step;
        step["n"] = s.n;
        step["ratio"] = json_float(s.ratio);
        step["error"] = json_float(s.error);
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    return j;
}

Json json_of(const ReconstructionReport& r) {
    Json j;
    j["n"] = r.n;
    j["tol"] = r.tol;
    Json roots = Json::array();
    for (double v : r.roots) {
        roots.push_back(json_float(v));
    }
    j["roots"] = std::move(roots);
    Json recon = Json::array();
    for (double v : r.reconstructed) {
        recon.push_back(json_float(v));
    }
    j["reconstructed"] = std::move(recon);
    Json exact = Json::array();
    for (const auto& c : r.exact) {
        exact.push_back(c.str());
    }
    j["exact"] = std::move(exact);
    j["max_abs_error"] = json_float(r.max_abs_error);
    j["pass"] = r.pass;
    return j;
}

} // namespace oresme
