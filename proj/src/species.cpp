#include <cstdlib>
#include <fstream>

#include "trapion/errors.hpp"
#include "trapion/json_fields.hpp"
#include "trapion/resources.hpp"

namespace trapion::resources {

namespace {

constexpr double kNm = 1e-9;
constexpr double kYear = kSecondsPerYear;

IonSpecies metastable(std::string name, double tau0, std::optional<double> lambda0,
                      std::optional<double> lambda_ex, std::optional<double> tau_ex,
                      double rhs_over_eta) {
    IonSpecies s;
    s.name = std::move(name);
    s.qubit_kind = QubitKind::Metastable;
    s.tau0 = tau0;
    s.lambda0 = lambda0;
    s.lambda_ex = lambda_ex;
    s.tau_ex = tau_ex;
    s.eta_default = 0.01;
    s.bound_rhs_over_eta = rhs_over_eta;
    return s;
}

std::optional<double> optional_number(const nlohmann::json& obj, const std::string& key) {
    if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
    return detail::field<double>(obj, key);
}

void put(nlohmann::json& obj, const std::string& key, const std::optional<double>& v) {
    obj[key] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

SpeciesTable builtin_species() {
    // tau0 and the per-ion bound coefficients are the published values.
    // Wavelengths and dipole lifetimes are approximate literature values
    // (S-D / S-F qubit line, S-P1/2 line, P1/2 lifetime) and only feed the
    // physical-mode bound. Yb+ carries no physical parameters.
    SpeciesTable t;
    auto add = [&](IonSpecies s) { t.emplace(s.name, std::move(s)); };
    add(metastable("Hg+", 0.1, 281.5 * kNm, 194.2 * kNm, 2.3e-9, 3e7));
    add(metastable("Sr+", 0.4, 674.0 * kNm, 421.7 * kNm, 7.4e-9, 7e7));
    add(metastable("Ca+", 1.0, 729.1 * kNm, 396.8 * kNm, 7.1e-9, 1e8));
    add(metastable("Ba+", 60.0, 1762.0 * kNm, 493.4 * kNm, 7.9e-9, 5e8));
    add(metastable("Yb+", 10.0 * kYear, std::nullopt, std::nullopt, std::nullopt, 3e7));

    IonSpecies raman;
    raman.name = "Raman-typical";
    raman.qubit_kind = QubitKind::Raman;
    raman.tau1 = 1e-8;
    raman.eta_default = 0.01;
    add(raman);

    IonSpecies be;
    be.name = "Be+";
    be.qubit_kind = QubitKind::Raman;
    be.tau1 = 8.2e-9;
    be.lambda_ex = 313.0 * kNm;
    be.eta_default = 0.01;
    add(be);
    return t;
}

SpeciesTable species_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("species config must be a JSON object keyed by name");
    SpeciesTable t;
    for (const auto& [name, entry] : j.items()) {
        try {
            IonSpecies s;
            s.name = name;
            s.qubit_kind = qubit_kind_from_string(detail::field<std::string>(entry, "qubit_kind"));
            s.tau0 = optional_number(entry, "tau0_s");
            s.tau_ex = optional_number(entry, "tau_ex_s");
            s.tau1 = optional_number(entry, "tau1_s");
            s.lambda0 = optional_number(entry, "lambda0_m");
            s.lambda_ex = optional_number(entry, "lambda_ex_m");
            s.eta_default = detail::field_or<double>(entry, "eta", 0.01);
            s.bound_rhs_over_eta = optional_number(entry, "bound_rhs_over_eta");
            s.validate();
            t.emplace(name, std::move(s));
        } catch (const InputError& e) {
            throw InputError("species '" + name + "': " + e.what());
        }
    }
    return t;
}

nlohmann::json to_json(const SpeciesTable& table) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [name, s] : table) {
        nlohmann::json e;
        e["qubit_kind"] = to_string(s.qubit_kind);
        put(e, "tau0_s", s.tau0);
        put(e, "tau_ex_s", s.tau_ex);
        put(e, "tau1_s", s.tau1);
        put(e, "lambda0_m", s.lambda0);
        put(e, "lambda_ex_m", s.lambda_ex);
        e["eta"] = s.eta_default;
        put(e, "bound_rhs_over_eta", s.bound_rhs_over_eta);
        out[name] = e;
    }
    return out;
}

SpeciesTable load_species(const std::optional<std::string>& path) {
    std::optional<std::string> source = path;
    if (!source) {
        if (const char* env = std::getenv("TRAPION_SPECIES_CONFIG"); env && *env) source = env;
    }
    if (!source) return builtin_species();
    std::ifstream in(*source);
    if (!in) throw InputError("cannot open species config '" + *source + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("species config '" + *source + "' is not valid JSON: " + e.what());
    }
    return species_from_json(j);
}

const IonSpecies& find_species(const SpeciesTable& table, const std::string& name) {
    auto it = table.find(name);
    if (it == table.end()) throw InputError("unknown species '" + name + "'");
    return it->second;
}

}  // namespace trapion::resources
