#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ssna/error.hpp"

namespace ssna {

enum class DyadKind { binary_match, abs_difference, similarity, interaction };

std::string dyad_kind_name(DyadKind k);

// Square actor-by-actor matrix of a dyadic variable. Symmetric; the diagonal
// is structurally missing and excluded from every statistic.
class DyadMatrix {
public:
    DyadMatrix(std::vector<std::string> actors, DyadKind kind);

    std::size_t size() const { return actors_.size(); }
    const std::vector<std::string>& actors() const { return actors_; }
    DyadKind kind() const { return kind_; }
    void set_kind(DyadKind k) { kind_ = k; }

    double at(std::size_t i, std::size_t j) const { return values_[i * size() + j]; }
    bool is_missing(std::size_t i, std::size_t j) const {
        return missing_[i * size() + j] != 0;
    }

    // Symmetric assignment; clears the missing flag. i == j is ignored.
    void set(std::size_t i, std::size_t j, double v);
    void set_missing(std::size_t i, std::size_t j);

    // Row/column indices of an actor id, or nullopt.
    std::optional<std::size_t> index_of(const std::string& actor) const;

    // Upper-triangle (i < j) dyad list; each entry is (i, j).
    std::vector<std::pair<std::size_t, std::size_t>> upper_dyads() const;

    // Square CSV with author_id header row and column; missing cells empty.
    void to_csv(std::ostream& out) const;
    static DyadMatrix from_csv(std::istream& in, DyadKind kind);

    // Principal submatrix over the selected actors (order preserved).
    DyadMatrix submatrix(const std::vector<std::size_t>& keep) const;

private:
    std::vector<std::string> actors_;
    DyadKind kind_;
    std::vector<double> values_;
    std::vector<std::uint8_t> missing_;
};

// M_ij = 1 if attr_i == attr_j else 0. Actors with missing attributes get
// missing rows/columns.
DyadMatrix match_matrix(const std::vector<std::string>& actors,
                        const std::vector<std::optional<std::string>>& attr);

// M_ij = |x_i - x_j|.
DyadMatrix absdiff_matrix(const std::vector<std::string>& actors,
                          const std::vector<std::optional<double>>& score);

enum class SimilarityTransform { raw, negate, max_minus };

// Turn an abs-difference matrix into a similarity matrix.
DyadMatrix to_similarity(const DyadMatrix& m, SimilarityTransform transform);

// Principal submatrices over actors selected by the mask; throws
// NotEnoughActors when fewer than 3 are selected.
std::vector<DyadMatrix> filter_group(const std::vector<DyadMatrix>& matrices,
                                     const std::function<bool(const std::string&)>& mask);

}  // namespace ssna
