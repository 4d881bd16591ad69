#include "ssna/report.hpp"

#include <cstdio>
#include <ostream>

#include "ssna/csv.hpp"

namespace ssna {

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

std::string format_percent2(double fraction) {
    return format_fixed(fraction * 100.0, 2) + "%";
}

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string significance_stars(double p) {
    if (p < 0.001) return "***";
    if (p < 0.01) return "**";
    if (p < 0.05) return "*";
    return "";
}

void render_csv(std::ostream& out, const Table& table) {
    csv::write_row(out, table.header);
    for (const auto& row : table.rows) csv::write_row(out, row);
}

void render_markdown(std::ostream& out, const Table& table) {
    if (!table.title.empty()) out << "### " << table.title << "\n\n";
    auto emit_row = [&out](const std::vector<std::string>& row) {
        out << '|';
        for (const auto& cell : row) out << ' ' << cell << " |";
        out << '\n';
    };
    emit_row(table.header);
    out << '|';
    for (std::size_t i = 0; i < table.header.size(); ++i) out << " --- |";
    out << '\n';
    for (const auto& row : table.rows) emit_row(row);
    out << '\n';
}

}  // namespace ssna
