#pragma once

#include <span>
#include <vector>

#include "riemsol/linalg.hpp"
#include "riemsol/rational.hpp"

namespace riemsol {

class FrameManifold;

enum class Variance { Covariant, Contravariant };

/// Dense exact tensor of rank 0..4 over a 3-dimensional frame, with an
/// explicit variance per slot. Components are indexed 0-based.
class Tensor {
public:
    explicit Tensor(std::vector<Variance> slots);
    static Tensor scalar(Rational value);
    /// (0,2) tensor with the entries of a symmetric or general matrix.
    static Tensor covariant2(const Mat3& a);

    int rank() const { return static_cast<int>(slots_.size()); }
    Variance slot(int index) const { return slots_[static_cast<size_t>(index)]; }
    const std::vector<Variance>& slots() const { return slots_; }

    const Rational& value() const;

    Rational& at(std::span<const int> idx);
    const Rational& at(std::span<const int> idx) const;
    Rational& at(int i);
    const Rational& at(int i) const;
    Rational& at(int i, int j);
    const Rational& at(int i, int j) const;
    Rational& at(int i, int j, int k);
    const Rational& at(int i, int j, int k) const;
    Rational& at(int i, int j, int k, int l);
    const Rational& at(int i, int j, int k, int l) const;

    bool is_zero() const;
    /// Maximum absolute value over all components (0 for the zero tensor).
    Rational max_abs() const;
    /// Rank-2 tensors only.
    bool is_symmetric2() const;
    Mat3 as_matrix() const;

    friend bool operator==(const Tensor&, const Tensor&);
    Tensor operator+(const Tensor& other) const;
    Tensor operator-(const Tensor& other) const;
    Tensor operator-() const;
    friend Tensor operator*(const Rational& s, const Tensor& t);

private:
    size_t flat_index(std::span<const int> idx) const;

    std::vector<Variance> slots_;
    std::vector<Rational> comp_;
};

/// Metric contraction of slots a and b (0-based, distinct). Two covariant
/// slots contract against the inverse metric, two contravariant slots
/// against the metric, and a mixed pair is the plain trace. Remaining slots
/// keep their order. Throws BadSlotError on bad slot indices.
Tensor contract(const Tensor& t, int slot_a, int slot_b, const FrameManifold& m);

/// Squared metric norm of a (0,2) tensor: g^{ik} g^{jl} t_ij t_kl.
/// Throws BadValenceError for any other valence.
Rational norm_squared(const Tensor& t, const FrameManifold& m);

} // namespace riemsol
