#pragma once

#include "ahh/poly.hpp"

#include <map>
#include <optional>

namespace ahh {

// Dense matrix over a field, row-major.
struct Matrix {
    Field field;
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<Scalar>> a;

    Matrix(Field f, std::size_t r, std::size_t c) : field(f), rows(r), cols(c), a(r, std::vector<Scalar>(c, Scalar(f))) {}
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
// Basis of {v : M v = 0}.
std::vector<std::vector<Scalar>> nullspace(Matrix m);
// One solution of M v = b per right-hand side, or nullopt when inconsistent.
std::vector<std::optional<std::vector<Scalar>>> solve_many(const Matrix& m, const std::vector<std::vector<Scalar>>& rhs);

// Assembles a matrix from sparse columns keyed by arbitrary ordered row keys.
template <class Key>
class ColumnAssembler {
public:
    explicit ColumnAssembler(Field f) : f_(f) {}
    void add_column(const std::map<Key, Scalar>& col) { cols_.push_back(col); note(col); }
    std::vector<Scalar> vector_for(const std::map<Key, Scalar>& v) {
        note(v);
        std::vector<Scalar> out(index_.size(), Scalar(f_));
        for (const auto& [k, c] : v) out[index_.at(k)] = c;
        return out;
    }
    // Call after every vector_for so that rows cover all keys; pads earlier rhs vectors.
    Matrix matrix() const {
        Matrix m(f_, index_.size(), cols_.size());
        for (std::size_t j = 0; j < cols_.size(); ++j)
            for (const auto& [k, c] : cols_[j]) m.a[index_.at(k)][j] = c;
        return m;
    }
    std::size_t rows() const { return index_.size(); }

private:
    void note(const std::map<Key, Scalar>& v) {
        for (const auto& kv : v) index_.try_emplace(kv.first, index_.size());
    }
    Field f_;
    std::map<Key, std::size_t> index_;
    std::vector<std::map<Key, Scalar>> cols_;
};

// Matrices over F[t], stored column by column.
using PolyColumn = std::vector<Poly>;

struct PolyEchelon {
    std::vector<PolyColumn> basis;  // lower-triangular, pivot entries monic
    std::vector<std::size_t> pivot_rows;
};
// Column echelon form (Hermite-like) of the module spanned by `cols` inside F[t]^n.
PolyEchelon column_echelon(std::vector<PolyColumn> cols, std::size_t n);
// Determinant of a square matrix over F[t] given as columns (fraction-free elimination).
Poly poly_det(std::vector<PolyColumn> cols);

}  // namespace ahh
