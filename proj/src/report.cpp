#include "signreg/report.hpp"

namespace signreg {

Json to_json(const RatVector& v) {
    Json out = Json::array();
    for (const auto& e : v) out.push_back(e.str());
    return out;
}

Json to_json(const RatMatrix& a) {
    Json out = Json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).str());
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const IndexSet& s) { return Json(s.indices()); }

Json to_json(const Classification& c) {
    Json out;
    out["verdict"] = to_string(c.verdict);
    out["order"] = c.order;
    out["pattern"] = c.pattern.str();
    if (c.violation) {
        out["violation"] = {{"order", c.violation->order},
                            {"rows", to_json(c.violation->rows)},
                            {"cols", to_json(c.violation->cols)},
                            {"reason", to_string(c.violation->reason)}};
    } else {
        out["violation"] = nullptr;
    }
    out["minors_inspected"] = c.minors_inspected;
    return out;
}

Json to_json(const VdReport& r, bool include_records) {
    Json out;
    out["mode"] = to_string(r.mode);
    out["status"] = r.certified ? "certified" : "failed";
    out["pattern"] = r.pattern.str();
    if (r.failure) {
        out["failure"] = {{"rows", to_json(r.failure->rows)},
                          {"cols", to_json(r.failure->cols)},
                          {"reason", to_string(r.failure->reason)}};
    } else {
        out["failure"] = nullptr;
    }
    if (include_records) {
        Json recs = Json::array();
        for (const auto& rec : r.records) {
            Json j;
            j["rows"] = to_json(rec.rows);
            j["cols"] = to_json(rec.cols);
            j["x"] = to_json(rec.x);
            j["product"] = to_json(rec.product);
            j["s_minus_x"] = rec.s_x;
            j[r.mode == VdMode::Strict ? "s_plus_product" : "s_minus_product"] = rec.s_product;
            j["agreement"] = to_string(rec.agreement);
            j["passed"] = rec.passed;
            recs.push_back(std::move(j));
        }
        out["records"] = std::move(recs);
    }
    return out;
}

Json to_json(const Witness& w) {
    Json out;
    out["x"] = to_json(w.x);
    out["ax"] = to_json(w.ax);
    out["s_minus_x"] = w.s_minus_x;
    out["s_plus_ax"] = w.s_plus_ax;
    out["construction"] = to_string(w.construction);
    return out;
}

Json to_json(const VariationResult& v) {
    auto set = [](const SignSet& s) {
        Json a = Json::array();
        if (s.minus) a.push_back(-1);
        if (s.plus) a.push_back(1);
        return a;
    };
    Json out;
    out["s_minus"] = v.s_minus;
    out["s_plus"] = v.s_plus;
    out["first_nonzero_sign"] = v.first_nonzero_sign;
    out["last_nonzero_sign"] = v.last_nonzero_sign;
    out["s_plus_first_signs"] = set(v.s_plus_first_signs);
    out["s_plus_last_signs"] = set(v.s_plus_last_signs);
    out["zero_vector"] = v.zero_vector;
    return out;
}

}  // namespace signreg
