#include "trapion/tables.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "trapion/errors.hpp"

namespace trapion::tables {

namespace {

std::string format_double(double v, const char* fmt) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::string cell_text(const Cell& c, bool pretty) {
    struct Visitor {
        bool pretty;
        std::string operator()(std::monostate) const { return pretty ? "-" : ""; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v, pretty ? "%.3g" : "%.17g"); }
        std::string operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{pretty}, c);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

nlohmann::ordered_json cell_json(const Cell& c) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
        nlohmann::ordered_json operator()(double v) const { return v; }
        nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, c);
}

Cell integer(std::uint64_t v) { return static_cast<std::int64_t>(v); }

constexpr std::array<std::uint64_t, 4> kModuli = {512, 1024, 2048, 4096};

}  // namespace

Format format_from_string(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "pretty") return Format::Pretty;
    throw InputError("format must be json, csv or pretty, got \"" + s + "\"");
}

std::string render(const Table& table, Format format) {
    std::ostringstream out;
    switch (format) {
    case Format::Json: {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            nlohmann::ordered_json r = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < table.columns.size(); ++i) r[table.columns[i]] = cell_json(row[i]);
            rows.push_back(std::move(r));
        }
        nlohmann::ordered_json j = {{"table", table.name}, {"columns", table.columns}, {"rows", rows}};
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Csv: {
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            out << (i ? "," : "") << csv_escape(table.columns[i]);
        }
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "," : "") << csv_escape(cell_text(row[i], false));
            }
            out << '\n';
        }
        break;
    }
    case Format::Pretty: {
        std::vector<std::vector<std::string>> text;
        text.push_back(table.columns);
        for (const auto& row : table.rows) {
            std::vector<std::string> line;
            for (const auto& c : row) line.push_back(cell_text(c, true));
            text.push_back(std::move(line));
        }
        std::vector<std::size_t> width(table.columns.size(), 0);
        for (const auto& line : text) {
            for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
        }
        for (const auto& line : text) {
            std::string s;
            for (std::size_t i = 0; i < line.size(); ++i) {
                if (i) s += "  ";
                s += line[i] + std::string(width[i] - line[i].size(), ' ');
            }
            while (!s.empty() && s.back() == ' ') s.pop_back();
            out << s << '\n';
        }
        break;
    }
    }
    return out.str();
}

Table table1(const resources::GnfsModel& model) {
    constexpr std::array<double, 4> published = {2e4, 2e12, 6e22, 3e36};
    Table t{"table1", {"bits", "mips_years", "published_mips_years", "ratio"}, {}};
    for (std::size_t i = 0; i < kModuli.size(); ++i) {
        const double v = resources::gnfs_mips_years(static_cast<double>(kModuli[i]), model);
        t.rows.push_back({integer(kModuli[i]), v, published[i], v / published[i]});
    }
    return t;
}

Table table2(const resources::AttackScenario& base, const resources::GnfsModel& model) {
    struct PublishedCell {
        double years;
        const char* text;
    };
    constexpr std::array<int, 6> years = {1997, 2006, 2015, 2024, 2033, 2042};
    constexpr std::array<std::uint64_t, 3> moduli = {1024, 2048, 4096};
    const PublishedCell published[3][6] = {
        {{1e7, "10^7 years"},
         {1e5, "10^5 years"},
         {2500.0, "2,500 years"},
         {38.0, "38 years"},
         {7.0 / 12.0, "7 months"},
         {3.0 / 365.25, "3 days"}},
        {{3e17, "3x10^17 years"},
         {5e15, "5x10^15 years"},
         {7e13, "7x10^13 years"},
         {1e12, "10^12 years"},
         {2e10, "2x10^10 years"},
         {3e8, "3x10^8 years"}},
        {{2e31, "2x10^31 years"},
         {3e29, "3x10^29 years"},
         {4e27, "4x10^27 years"},
         {7e25, "7x10^25 years"},
         {1e24, "10^24 years"},
         {2e22, "2x10^22 years"}},
    };
    Table t{"table2", {"bits", "year", "wall_clock_years", "published_years", "published_text", "ratio"}, {}};
    for (std::size_t m = 0; m < moduli.size(); ++m) {
        for (std::size_t y = 0; y < years.size(); ++y) {
            resources::AttackScenario s = base;
            s.year = years[y];
            const double v = resources::wall_clock_years(static_cast<double>(moduli[m]), s, model);
            t.rows.push_back({integer(moduli[m]), std::int64_t{years[y]}, v, published[m][y].years,
                              std::string(published[m][y].text), v / published[m][y].years});
        }
    }
    return t;
}

Table table3(double clock_hz) {
    constexpr std::array<std::uint64_t, 4> published_qubits = {2564, 5124, 10244, 20484};
    constexpr std::array<double, 4> published_gates = {3e9, 3e10, 2e11, 2e12};
    constexpr std::array<double, 4> published_time = {33.0, 4.5 * 60.0, 36.0 * 60.0, 4.8 * 3600.0};
    constexpr std::array<const char*, 4> published_text = {"33 seconds", "4.5 minutes", "36 minutes",
                                                       "4.8 hours"};
    Table t{"table3",
            {"bits", "qubits", "published_qubits", "gates", "published_gates", "time_s", "published_time_s",
             "published_text"},
            {}};
    for (std::size_t i = 0; i < kModuli.size(); ++i) {
        const auto r = resources::shor_resources(kModuli[i], clock_hz);
        t.rows.push_back({integer(kModuli[i]), integer(r.qubits), integer(published_qubits[i]),
                          integer(r.gates), published_gates[i], r.quantum_time_s, published_time[i],
                          std::string(published_text[i])});
    }
    return t;
}

Table capacity_table(const resources::SpeciesTable& species, double eta,
                     const resources::CapacityOptions& options, const std::vector<std::string>& names) {
    struct Published {
        const char* name;
        std::int64_t bits;
    };
    constexpr std::array<Published, 5> published = {
        {{"Hg+", 5}, {"Sr+", 6}, {"Ca+", 6}, {"Ba+", 10}, {"Yb+", 5}}};
    Table t{"capacity",
            {"species", "qubit_kind", "eta", "bound", "max_bits", "published_max_bits", "u_pulses",
             "qubits", "load", "success_probability", "time_budget_s"},
            {}};
    std::vector<std::string> rows = names;
    if (rows.empty()) {
        for (const auto& p : published) rows.emplace_back(p.name);
    }
    for (const auto& name : rows) {
        Cell published_bits;
        for (const auto& p : published) {
            if (name == p.name) published_bits = p.bits;
        }
        const auto c = resources::max_factorable_bits(resources::find_species(species, name), eta, options);
        t.rows.push_back({c.species, resources::to_string(c.kind), c.eta, c.bound, integer(c.max_bits),
                          published_bits, integer(c.u_pulses), integer(c.qubits), c.load,
                          c.success_probability, c.time_budget_s ? Cell{*c.time_budget_s} : Cell{}});
    }
    return t;
}

Table emit_table(const std::string& which, const resources::SpeciesTable& species) {
    if (which == "table1") return table1();
    if (which == "table2") return table2();
    if (which == "table3") return table3();
    if (which == "capacity") return capacity_table(species);
    throw InputError("unknown table '" + which + "'");
}

}  // namespace trapion::tables
