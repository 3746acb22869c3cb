#include "trapion/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trapion/circuit_io.hpp"
#include "trapion/errors.hpp"
#include "trapion/pulse_compiler.hpp"
#include "trapion/resources.hpp"
#include "trapion/rsa.hpp"
#include "trapion/shor.hpp"
#include "trapion/snapshot.hpp"
#include "trapion/tables.hpp"

namespace trapion::cli {

namespace {

using nlohmann::json;

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

struct Output {
    std::string path;
    std::ostream* stream = nullptr;

    void write(const std::string& text) const {
        if (path.empty()) {
            *stream << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw InputError("cannot write '" + path + "'");
        f << text;
    }
    void write(const json& j) const { write(j.dump(2) + "\n"); }
};

struct SimulateArgs {
    std::string circuit;
    std::string pulses;
    std::string backend = "pulse";
    std::size_t phonon_dim = 2;
    std::size_t shots = 0;
};

json counts_json(const std::map<std::string, std::size_t>& counts) {
    json j = json::object();
    for (const auto& [k, v] : counts) j[k] = v;
    return j;
}

json run_simulate(const SimulateArgs& a, std::uint64_t seed) {
    if (a.circuit.empty() == a.pulses.empty()) {
        throw InputError("simulate needs exactly one of --circuit or --pulses");
    }
    if (a.backend != "pulse" && a.backend != "gate") {
        throw InputError("--backend must be pulse or gate");
    }
    Rng rng(seed);
    json out;
    out["backend"] = a.backend;
    out["seed"] = seed;
    out["shots"] = a.shots;
    std::map<std::string, std::size_t> counts;

    if (a.backend == "gate") {
        if (!a.pulses.empty()) throw InputError("--pulses requires the pulse backend");
        const auto circuit = pulse::circuit_from_json(read_json_file(a.circuit));
        const auto state = pulse::run_gate_level(circuit);
        out["num_ions"] = circuit.num_ions;
        out["state"] = sim::to_json(state);
        for (std::size_t s = 0; s < a.shots; ++s) {
            auto copy = state;
            ++counts[sim::bitstring(sim::measure_all(copy, rng), state.num_qubits())];
        }
    } else {
        pulse::PulseSchedule schedule;
        if (!a.pulses.empty()) {
            schedule = pulse::schedule_from_json(read_json_file(a.pulses));
        } else {
            schedule = pulse::compile(pulse::circuit_from_json(read_json_file(a.circuit)), a.phonon_dim);
        }
        auto state = sim::new_ground_state(schedule.shape);
        pulse::execute(schedule, state);
        out["num_ions"] = schedule.shape.num_ions;
        out["phonon_dim"] = schedule.shape.phonon_dim;
        out["u_pulse_count"] = pulse::count_u_pulses(schedule);
        out["state"] = sim::to_json(state);
        std::size_t aux = 0;
        for (std::size_t s = 0; s < a.shots; ++s) {
            auto copy = state;
            const auto m = sim::measure_all(copy, rng);
            if (m.aux_leak) ++aux;
            ++counts[m.bits];
        }
        out["aux_leaks"] = aux;
    }
    out["counts"] = counts_json(counts);
    return out;
}

resources::BoundMode bound_mode(const std::string& s) {
    if (s == "paper") return resources::BoundMode::PaperCalibrated;
    if (s == "physical") return resources::BoundMode::Physical;
    throw InputError("--mode must be paper or physical, got \"" + s + "\"");
}

shor::Mode factor_mode(const std::string& s) {
    if (s == "simulated") return shor::Mode::Simulated;
    if (s == "oracle") return shor::Mode::Oracle;
    throw InputError("--mode must be simulated or oracle, got \"" + s + "\"");
}

const std::vector<std::uint64_t> kTableModuli = {512, 1024, 2048, 4096};

tables::Table gnfs_table(const std::vector<std::uint64_t>& bits, const resources::AttackScenario& s) {
    tables::Table t{"gnfs", {"bits", "mips_years", "year", "wall_clock_years"}, {}};
    for (auto b : bits) {
        const double l = static_cast<double>(b);
        t.rows.push_back({static_cast<std::int64_t>(b), resources::gnfs_mips_years(l),
                          std::int64_t{s.year}, resources::wall_clock_years(l, s)});
    }
    return t;
}

tables::Table quantum_table(const std::vector<std::uint64_t>& bits, double clock_hz) {
    tables::Table t{"quantum", {"bits", "qubits", "gates", "u_pulses", "clock_hz", "time_s", "mips_years"}, {}};
    for (auto b : bits) {
        const auto r = resources::shor_resources(b, clock_hz);
        tables::Cell mips;
        if (b >= 64) mips = resources::gnfs_mips_years(static_cast<double>(b));
        t.rows.push_back({static_cast<std::int64_t>(r.bits), static_cast<std::int64_t>(r.qubits),
                          static_cast<std::int64_t>(r.gates), static_cast<std::int64_t>(r.u_pulses),
                          r.clock_hz, r.quantum_time_s, mips});
    }
    return t;
}

tables::Table bounds_table(const resources::SpeciesTable& species, const std::vector<std::string>& names,
                           std::optional<double> eta, const resources::CapacityOptions& options) {
    tables::Table t{"bounds", {"species", "qubit_kind", "eta", "delta", "bound"}, {}};
    const bool explicit_names = !names.empty();
    std::vector<std::string> rows = names;
    if (!explicit_names) {
        for (const auto& [name, s] : species) rows.push_back(name);
    }
    for (const auto& name : rows) {
        const auto& s = resources::find_species(species, name);
        const double e = eta.value_or(s.eta_default);
        const double delta = options.delta.value_or(s.qubit_kind == resources::QubitKind::Metastable
                                                        ? resources::kDefaultMetastableDetuning
                                                        : resources::kDefaultRamanDetuning);
        tables::Cell bound;
        try {
            bound = resources::species_bound(s, e, options);
        } catch (const MissingParameters&) {
            if (explicit_names) throw;
        }
        t.rows.push_back({name, resources::to_string(s.qubit_kind), e, delta, bound});
    }
    return t;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Trapped-ion quantum factoring simulator and resource estimator", "trapion"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "json";
    std::string species_config;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "Write output to this file instead of stdout");
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    };

    // simulate
    SimulateArgs sim_args;
    auto* simulate = app.add_subcommand("simulate", "Run a circuit or pulse schedule and report the final state");
    simulate->add_option("--circuit", sim_args.circuit, "Gate circuit JSON file");
    simulate->add_option("--pulses", sim_args.pulses, "Pulse schedule JSON file");
    simulate->add_option("--backend", sim_args.backend, "pulse or gate")->check(CLI::IsMember({"pulse", "gate"}));
    simulate->add_option("--phonon-dim", sim_args.phonon_dim, "Fock cutoff d (>= 2)");
    simulate->add_option("--shots", sim_args.shots, "Number of measurement shots");
    simulate->add_option("--seed", seed, "RNG seed");
    add_common(simulate);

    // compile
    std::string compile_circuit;
    std::size_t compile_dim = 2;
    pulse::LaserParams laser;
    auto* compile = app.add_subcommand("compile", "Lower a gate circuit to a pulse schedule");
    compile->add_option("--circuit", compile_circuit, "Gate circuit JSON file")->required();
    compile->add_option("--phonon-dim", compile_dim, "Fock cutoff d (>= 2)");
    compile->add_option("--rabi", laser.rabi_frequency, "Rabi frequency in rad/s");
    compile->add_option("--eta", laser.lamb_dicke, "Lamb-Dicke parameter");
    add_common(compile);

    // factor
    std::uint64_t factor_n = 0;
    std::string factor_mode_name = "simulated";
    std::optional<std::size_t> register_bits;
    std::uint64_t max_n = shor::kDefaultSimulatedLimit;
    auto* factor = app.add_subcommand("factor", "Factor N with Shor's algorithm");
    factor->add_option("--n", factor_n, "Odd composite to factor")->required();
    factor->add_option("--mode", factor_mode_name, "simulated or oracle");
    factor->add_option("--seed", seed, "RNG seed");
    factor->add_option("--register-bits", register_bits, "Argument register width (default 2l)");
    factor->add_option("--max-n", max_n, "Largest N allowed in simulated mode");
    add_common(factor);

    // rsa
    auto* rsa_cmd = app.add_subcommand("rsa", "RSA key generation, encryption and decryption");
    rsa_cmd->require_subcommand(1);
    std::size_t rsa_bits = 64;
    std::string rsa_e = "65537";
    std::string rsa_p;
    std::string rsa_q;
    std::string rsa_key;
    std::string rsa_message;
    std::string rsa_ciphertext;
    auto* keygen = rsa_cmd->add_subcommand("keygen", "Generate a key pair");
    keygen->add_option("--bits", rsa_bits, "Modulus size in bits");
    keygen->add_option("--e", rsa_e, "Preferred public exponent");
    keygen->add_option("--p", rsa_p, "Fixed prime p");
    keygen->add_option("--q", rsa_q, "Fixed prime q");
    keygen->add_option("--seed", seed, "RNG seed");
    add_common(keygen);
    auto* encrypt = rsa_cmd->add_subcommand("encrypt", "Encrypt an integer message");
    encrypt->add_option("--key", rsa_key, "Key JSON file")->required();
    encrypt->add_option("--message", rsa_message, "Decimal message")->required();
    add_common(encrypt);
    auto* decrypt = rsa_cmd->add_subcommand("decrypt", "Decrypt an integer ciphertext");
    decrypt->add_option("--key", rsa_key, "Key JSON file")->required();
    decrypt->add_option("--ciphertext", rsa_ciphertext, "Decimal ciphertext")->required();
    add_common(decrypt);

    // estimate
    auto* estimate = app.add_subcommand("estimate", "Classical and quantum factoring estimates");
    estimate->require_subcommand(1);
    std::vector<std::uint64_t> bits;
    double clock_hz = 1e8;
    resources::AttackScenario scenario;
    std::vector<std::string> species_names;
    std::optional<double> eta;
    std::optional<double> delta;
    std::string bound_mode_name = "paper";

    auto* gnfs = estimate->add_subcommand("gnfs", "GNFS MIPS-years and wall-clock projection");
    gnfs->add_option("--bits", bits, "Modulus sizes");
    gnfs->add_option("--year", scenario.year, "Attack year");
    gnfs->add_option("--workstations", scenario.workstations, "Number of workstations");
    gnfs->add_option("--mips", scenario.mips_per_workstation, "MIPS per workstation in the base year");
    auto* quantum = estimate->add_subcommand("quantum", "Shor qubits, gates and runtime");
    quantum->add_option("--bits", bits, "Modulus sizes");
    quantum->add_option("--clock-hz", clock_hz, "Gate clock frequency");
    auto* capacity = estimate->add_subcommand("capacity", "Largest factorable modulus per ion species");
    auto* bounds = estimate->add_subcommand("bounds", "Decoherence bounds per ion species");
    for (auto* sub : {capacity, bounds}) {
        sub->add_option("--species", species_names, "Species names");
        sub->add_option("--eta", eta, "Lamb-Dicke parameter");
        sub->add_option("--delta", delta, "Detuning in s^-1");
        sub->add_option("--mode", bound_mode_name, "paper or physical");
        sub->add_option("--species-config", species_config, "Species JSON file");
    }
    auto* table1 = estimate->add_subcommand("table1", "GNFS MIPS-years for 512 to 4096 bits");
    auto* table2 = estimate->add_subcommand("table2", "Wall-clock projection for 1997 to 2042");
    auto* table3 = estimate->add_subcommand("table3", "Quantum factoring times at a given clock");
    table3->add_option("--clock-hz", clock_hz, "Gate clock frequency");
    for (auto* sub : {gnfs, quantum, capacity, bounds, table1, table2, table3}) {
        add_format(sub);
        add_common(sub);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Output sink{out_path, &out};
    try {
        if (simulate->parsed()) {
            sink.write(run_simulate(sim_args, seed));
        } else if (compile->parsed()) {
            const auto circuit = pulse::circuit_from_json(read_json_file(compile_circuit));
            laser.num_ions = circuit.num_ions;
            sink.write(pulse::to_json(pulse::compile(circuit, compile_dim), laser));
        } else if (factor->parsed()) {
            shor::FactorOptions options;
            options.mode = factor_mode(factor_mode_name);
            options.simulated_limit = max_n;
            options.order_finding.argument_bits = register_bits;
            Rng rng(seed);
            sink.write(shor::to_json(shor::shor_factor(factor_n, rng, options), seed));
        } else if (keygen->parsed()) {
            const auto e = rsa::parse_decimal(rsa_e, "e");
            if (rsa_p.empty() != rsa_q.empty()) throw InputError("--p and --q must be given together");
            if (!rsa_p.empty()) {
                sink.write(rsa::to_json(rsa::keygen_from_primes(rsa::parse_decimal(rsa_p, "p"),
                                                                rsa::parse_decimal(rsa_q, "q"), e)));
            } else {
                Rng rng(seed);
                sink.write(rsa::to_json(rsa::keygen(rsa_bits, e, rng)));
            }
        } else if (encrypt->parsed()) {
            const auto key = rsa::public_key_from_json(read_json_file(rsa_key));
            const auto c = rsa::encrypt(key, rsa::parse_decimal(rsa_message, "message"));
            sink.write(json{{"ciphertext", c.str()}});
        } else if (decrypt->parsed()) {
            const auto key = rsa::private_key_from_json(read_json_file(rsa_key));
            const auto m = rsa::decrypt(key, rsa::parse_decimal(rsa_ciphertext, "ciphertext"));
            sink.write(json{{"message", m.str()}});
        } else {
            const auto fmt = tables::format_from_string(format);
            std::optional<tables::Table> table;
            if (gnfs->parsed()) {
                table = gnfs_table(bits.empty() ? kTableModuli : bits, scenario);
            } else if (quantum->parsed()) {
                table = quantum_table(bits.empty() ? kTableModuli : bits, clock_hz);
            } else if (capacity->parsed() || bounds->parsed()) {
                const auto species =
                    resources::load_species(species_config.empty() ? std::nullopt
                                                                   : std::optional<std::string>(species_config));
                resources::CapacityOptions options;
                options.mode = bound_mode(bound_mode_name);
                options.delta = delta;
                if (capacity->parsed()) {
                    table = tables::capacity_table(species, eta.value_or(0.01), options, species_names);
                } else {
                    table = bounds_table(species, species_names, eta, options);
                }
            } else if (table1->parsed()) {
                table = tables::table1();
            } else if (table2->parsed()) {
                table = tables::table2();
            } else if (table3->parsed()) {
                table = tables::table3(clock_hz);
            }
            sink.write(tables::render(*table, fmt));
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace trapion::cli
