#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "trapion/resources.hpp"

namespace trapion::tables {

using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class Format { Json, Csv, Pretty };

Format format_from_string(const std::string& s);

// JSON: {"table": name, "columns": [...], "rows": [{column: value}]}, full
// double precision. CSV: header line then one line per row, %.17g doubles.
// Pretty: aligned columns, three significant figures.
std::string render(const Table& table, Format format);

// Columns: bits, mips_years, published_mips_years, ratio
Table table1(const resources::GnfsModel& model = {});
// Columns: bits, year, wall_clock_years, published_years, published_text, ratio
Table table2(const resources::AttackScenario& base = {}, const resources::GnfsModel& model = {});
// Columns: bits, qubits, published_qubits, gates, published_gates, time_s, published_time_s, published_text
Table table3(double clock_hz = 1e8);
// Columns: species, qubit_kind, eta, bound, max_bits, published_max_bits, u_pulses,
//          qubits, load, success_probability, time_budget_s
// names defaults to the five metastable ions with published limits.
Table capacity_table(const resources::SpeciesTable& species, double eta = 0.01,
                     const resources::CapacityOptions& options = {},
                     const std::vector<std::string>& names = {});

// which in {table1, table2, table3, capacity}
Table emit_table(const std::string& which, const resources::SpeciesTable& species);

}  // namespace trapion::tables
