#include "tcqed/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tcqed {

namespace {

using nlohmann::json;

const std::set<std::string> kParamKeys = {
    "gamma1", "gamma2", "kappa_l", "kappa_r", "g1", "g2",
    "J", "delta_c", "delta_eg1", "delta_eg2"};
const std::set<std::string> kDriveKeys = {"amp_l", "amp_r", "phase_l", "phase_r"};

complexd read_coupling(const json& v, const std::string& key) {
    if (v.is_number()) return complexd(v.get<double>(), 0.0);
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return complexd(v[0].get<double>(), v[1].get<double>());
    throw std::invalid_argument("parameter '" + key +
                                "' must be a number or a [re, im] pair");
}

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

ParameterFile load_params_json(std::istream& is) {
    json doc;
    try {
        doc = json::parse(is);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("parameter file: ") + e.what());
    }
    if (!doc.is_object())
        throw std::invalid_argument("parameter file must be a JSON object");

    for (const auto& [key, _] : doc.items()) {
        if (!kParamKeys.count(key) && !kDriveKeys.count(key))
            throw std::invalid_argument("parameter file: unknown key '" + key + "'");
    }
    for (const auto& key : kParamKeys) {
        if (!doc.contains(key))
            throw std::invalid_argument("parameter file: missing key '" + key + "'");
    }

    auto num = [&](const std::string& key) {
        if (!doc[key].is_number())
            throw std::invalid_argument("parameter '" + key + "' must be a number");
        return doc[key].get<double>();
    };

    ParameterFile pf;
    pf.params.gamma1 = num("gamma1");
    pf.params.gamma2 = num("gamma2");
    pf.params.kappa_l = num("kappa_l");
    pf.params.kappa_r = num("kappa_r");
    pf.params.g1 = read_coupling(doc["g1"], "g1");
    pf.params.g2 = read_coupling(doc["g2"], "g2");
    pf.params.J = num("J");
    pf.params.delta_c = num("delta_c");
    pf.params.delta_eg1 = num("delta_eg1");
    pf.params.delta_eg2 = num("delta_eg2");

    const double amp_l = doc.contains("amp_l") ? num("amp_l") : 1.0;
    const double amp_r = doc.contains("amp_r") ? num("amp_r") : 1.0;
    const double phase_l = doc.contains("phase_l") ? num("phase_l") : 0.0;
    const double phase_r = doc.contains("phase_r") ? num("phase_r") : 0.0;
    pf.drive = DriveConfig(amp_l, amp_r, phase_l, phase_r);
    return pf;
}

ParameterFile load_params_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open parameter file: " + path);
    return load_params_json(is);
}

void write_params_json(std::ostream& os, const ParameterFile& pf) {
    json doc;
    doc["gamma1"] = pf.params.gamma1;
    doc["gamma2"] = pf.params.gamma2;
    doc["kappa_l"] = pf.params.kappa_l;
    doc["kappa_r"] = pf.params.kappa_r;
    if (pf.params.g1.imag() == 0.0) doc["g1"] = pf.params.g1.real();
    else doc["g1"] = {pf.params.g1.real(), pf.params.g1.imag()};
    if (pf.params.g2.imag() == 0.0) doc["g2"] = pf.params.g2.real();
    else doc["g2"] = {pf.params.g2.real(), pf.params.g2.imag()};
    doc["J"] = pf.params.J;
    doc["delta_c"] = pf.params.delta_c;
    doc["delta_eg1"] = pf.params.delta_eg1;
    doc["delta_eg2"] = pf.params.delta_eg2;
    doc["amp_l"] = pf.drive.amp_l();
    doc["amp_r"] = pf.drive.amp_r();
    doc["phase_l"] = pf.drive.phase_l();
    doc["phase_r"] = pf.drive.phase_r();
    os << doc.dump(2) << '\n';
}

void write_table_csv(std::ostream& os, const SweepTable& table) {
    os << "x,out_l,out_r,cavity,atoms\n";
    for (const auto& row : table.rows) {
        os << fmt17(row.x) << ',' << fmt17(row.obs.out_l) << ','
           << fmt17(row.obs.out_r) << ',' << fmt17(row.obs.cavity) << ','
           << fmt17(row.obs.atoms) << '\n';
    }
}

std::vector<SweepRow> parse_table_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "x,out_l,out_r,cavity,atoms")
        throw std::invalid_argument("table CSV: bad or missing header");

    std::vector<SweepRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        double v[5];
        char sep;
        for (int i = 0; i < 5; ++i) {
            if (!(ss >> v[i]))
                throw std::invalid_argument("table CSV: malformed row '" + line + "'");
            if (i < 4 && !(ss >> sep && sep == ','))
                throw std::invalid_argument("table CSV: malformed row '" + line + "'");
        }
        rows.push_back({v[0], {v[1], v[2], v[3], v[4]}});
    }
    return rows;
}

void write_table_json(std::ostream& os, const SweepTable& table) {
    json doc;
    doc["columns"] = {"x", "out_l", "out_r", "cavity", "atoms"};
    json rows = json::array();
    for (const auto& r : table.rows)
        rows.push_back({r.x, r.obs.out_l, r.obs.out_r, r.obs.cavity, r.obs.atoms});
    doc["rows"] = rows;
    os << doc.dump(2) << '\n';
}

} // namespace tcqed
