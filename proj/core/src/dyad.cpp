#include "ssna/dyad.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "ssna/csv.hpp"

namespace ssna {

std::string dyad_kind_name(DyadKind k) {
    switch (k) {
        case DyadKind::binary_match: return "binary-match";
        case DyadKind::abs_difference: return "abs-difference";
        case DyadKind::similarity: return "similarity";
        case DyadKind::interaction: return "interaction";
    }
    return "?";
}

DyadMatrix::DyadMatrix(std::vector<std::string> actors, DyadKind kind)
    : actors_(std::move(actors)),
      kind_(kind),
      values_(actors_.size() * actors_.size(), 0.0),
      missing_(actors_.size() * actors_.size(), 1) {}  // cells missing until set

void DyadMatrix::set(std::size_t i, std::size_t j, double v) {
    if (i == j) return;
    const std::size_t n = size();
    values_[i * n + j] = v;
    values_[j * n + i] = v;
    missing_[i * n + j] = 0;
    missing_[j * n + i] = 0;
}

void DyadMatrix::set_missing(std::size_t i, std::size_t j) {
    if (i == j) return;
    const std::size_t n = size();
    missing_[i * n + j] = 1;
    missing_[j * n + i] = 1;
}

std::optional<std::size_t> DyadMatrix::index_of(const std::string& actor) const {
    for (std::size_t i = 0; i < actors_.size(); ++i)
        if (actors_[i] == actor) return i;
    return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> DyadMatrix::upper_dyads() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = size();
    out.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

namespace {

std::string format_cell(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

void DyadMatrix::to_csv(std::ostream& out) const {
    std::vector<std::string> header{"author_id"};
    header.insert(header.end(), actors_.begin(), actors_.end());
    csv::write_row(out, header);
    for (std::size_t i = 0; i < size(); ++i) {
        std::vector<std::string> row{actors_[i]};
        for (std::size_t j = 0; j < size(); ++j)
            row.push_back(is_missing(i, j) ? "" : format_cell(at(i, j)));
        csv::write_row(out, row);
    }
}

DyadMatrix DyadMatrix::from_csv(std::istream& in, DyadKind kind) {
    const auto rows = csv::parse(in);
    if (rows.size() < 2)
        throw Error(errc::schema_error, "matrix CSV needs a header and rows");
    const auto& header = rows.front();
    if (header.empty() || header[0] != "author_id")
        throw Error(errc::schema_error, "matrix CSV header must start with author_id");
    std::vector<std::string> actors(header.begin() + 1, header.end());
    if (rows.size() - 1 != actors.size())
        throw Error(errc::schema_error, "matrix CSV is not square");
    DyadMatrix m(actors, kind);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.size() != actors.size() + 1 || r[0] != actors[i - 1])
            throw Error(errc::schema_error,
                        "matrix CSV row " + std::to_string(i + 1) + " malformed");
        for (std::size_t j = 1; j < r.size(); ++j) {
            if (i == j) continue;
            if (r[j].empty())
                m.set_missing(i - 1, j - 1);
            else
                m.set(i - 1, j - 1, std::stod(r[j]));
        }
    }
    return m;
}

DyadMatrix DyadMatrix::submatrix(const std::vector<std::size_t>& keep) const {
    std::vector<std::string> actors;
    actors.reserve(keep.size());
    for (auto i : keep) actors.push_back(actors_[i]);
    DyadMatrix out(std::move(actors), kind_);
    for (std::size_t a = 0; a < keep.size(); ++a) {
        for (std::size_t b = a + 1; b < keep.size(); ++b) {
            if (is_missing(keep[a], keep[b]))
                out.set_missing(a, b);
            else
                out.set(a, b, at(keep[a], keep[b]));
        }
    }
    return out;
}

DyadMatrix match_matrix(const std::vector<std::string>& actors,
                        const std::vector<std::optional<std::string>>& attr) {
    bool any = false;
    for (const auto& a : attr) any = any || a.has_value();
    if (!any) throw Error(errc::empty_matrix, "attribute missing for every actor");
    DyadMatrix m(actors, DyadKind::binary_match);
    for (std::size_t i = 0; i < actors.size(); ++i) {
        for (std::size_t j = i + 1; j < actors.size(); ++j) {
            if (!attr[i] || !attr[j])
                m.set_missing(i, j);
            else
                m.set(i, j, *attr[i] == *attr[j] ? 1.0 : 0.0);
        }
    }
    return m;
}

DyadMatrix absdiff_matrix(const std::vector<std::string>& actors,
                          const std::vector<std::optional<double>>& score) {
    bool any = false;
    for (const auto& s : score) any = any || s.has_value();
    if (!any) throw Error(errc::empty_matrix, "score missing for every actor");
    DyadMatrix m(actors, DyadKind::abs_difference);
    for (std::size_t i = 0; i < actors.size(); ++i) {
        for (std::size_t j = i + 1; j < actors.size(); ++j) {
            if (!score[i] || !score[j])
                m.set_missing(i, j);
            else
                m.set(i, j, std::fabs(*score[i] - *score[j]));
        }
    }
    return m;
}

DyadMatrix to_similarity(const DyadMatrix& m, SimilarityTransform transform) {
    if (m.kind() != DyadKind::abs_difference)
        throw Error(errc::kind_error,
                    "to_similarity requires an abs-difference matrix, got " +
                        dyad_kind_name(m.kind()));
    DyadMatrix out = m;
    if (transform == SimilarityTransform::raw) return out;
    double maxv = 0.0;
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!m.is_missing(i, j)) maxv = std::max(maxv, m.at(i, j));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m.is_missing(i, j)) continue;
            const double v = m.at(i, j);
            out.set(i, j, transform == SimilarityTransform::negate ? -v : maxv - v);
        }
    }
    out.set_kind(DyadKind::similarity);
    return out;
}

std::vector<DyadMatrix> filter_group(
    const std::vector<DyadMatrix>& matrices,
    const std::function<bool(const std::string&)>& mask) {
    std::vector<DyadMatrix> out;
    out.reserve(matrices.size());
    for (const auto& m : matrices) {
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (mask(m.actors()[i])) keep.push_back(i);
        if (keep.size() < 3)
            throw Error(errc::not_enough_actors,
                        "group filter selects fewer than 3 actors");
        out.push_back(m.submatrix(keep));
    }
    return out;
}

}  // namespace ssna
