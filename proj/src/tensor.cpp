#include "riemsol/tensor.hpp"

#include <algorithm>
#include <cassert>

#include "riemsol/errors.hpp"
#include "riemsol/frame_manifold.hpp"

namespace riemsol {

namespace {

size_t power_of_dim(int rank) {
    size_t n = 1;
    for (int i = 0; i < rank; ++i) n *= static_cast<size_t>(kDim);
    return n;
}

} // namespace

Tensor::Tensor(std::vector<Variance> slots)
    : slots_(std::move(slots)), comp_(power_of_dim(static_cast<int>(slots_.size()))) {
    assert(slots_.size() <= 4);
}

Tensor Tensor::scalar(Rational value) {
    Tensor t({});
    t.comp_[0] = std::move(value);
    return t;
}

Tensor Tensor::covariant2(const Mat3& a) {
    Tensor t({Variance::Covariant, Variance::Covariant});
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) t.at(i, j) = a.at(i, j);
    return t;
}

const Rational& Tensor::value() const {
    assert(rank() == 0);
    return comp_[0];
}

size_t Tensor::flat_index(std::span<const int> idx) const {
    assert(static_cast<int>(idx.size()) == rank());
    size_t flat = 0;
    for (int v : idx) {
        assert(v >= 0 && v < kDim);
        flat = flat * static_cast<size_t>(kDim) + static_cast<size_t>(v);
    }
    return flat;
}

Rational& Tensor::at(std::span<const int> idx) { return comp_[flat_index(idx)]; }
const Rational& Tensor::at(std::span<const int> idx) const { return comp_[flat_index(idx)]; }

Rational& Tensor::at(int i) {
    const int idx[] = {i};
    return at(idx);
}
const Rational& Tensor::at(int i) const {
    const int idx[] = {i};
    return at(idx);
}
Rational& Tensor::at(int i, int j) {
    const int idx[] = {i, j};
    return at(idx);
}
const Rational& Tensor::at(int i, int j) const {
    const int idx[] = {i, j};
    return at(idx);
}
Rational& Tensor::at(int i, int j, int k) {
    const int idx[] = {i, j, k};
    return at(idx);
}
const Rational& Tensor::at(int i, int j, int k) const {
    const int idx[] = {i, j, k};
    return at(idx);
}
Rational& Tensor::at(int i, int j, int k, int l) {
    const int idx[] = {i, j, k, l};
    return at(idx);
}
const Rational& Tensor::at(int i, int j, int k, int l) const {
    const int idx[] = {i, j, k, l};
    return at(idx);
}

bool Tensor::is_zero() const {
    return std::all_of(comp_.begin(), comp_.end(), [](const Rational& x) { return x == 0; });
}

Rational Tensor::max_abs() const {
    Rational best = 0;
    for (const auto& x : comp_) {
        Rational a = rational_abs(x);
        if (a > best) best = a;
    }
    return best;
}

bool Tensor::is_symmetric2() const {
    assert(rank() == 2);
    for (int i = 0; i < kDim; ++i)
        for (int j = i + 1; j < kDim; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Mat3 Tensor::as_matrix() const {
    assert(rank() == 2);
    Mat3 out;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) out.at(i, j) = at(i, j);
    return out;
}

bool operator==(const Tensor& a, const Tensor& b) {
    return a.slots_ == b.slots_ && a.comp_ == b.comp_;
}

Tensor Tensor::operator+(const Tensor& other) const {
    assert(slots_ == other.slots_);
    Tensor out(slots_);
    for (size_t k = 0; k < comp_.size(); ++k) out.comp_[k] = comp_[k] + other.comp_[k];
    return out;
}

Tensor Tensor::operator-(const Tensor& other) const {
    assert(slots_ == other.slots_);
    Tensor out(slots_);
    for (size_t k = 0; k < comp_.size(); ++k) out.comp_[k] = comp_[k] - other.comp_[k];
    return out;
}

Tensor Tensor::operator-() const {
    Tensor out(slots_);
    for (size_t k = 0; k < comp_.size(); ++k) out.comp_[k] = -comp_[k];
    return out;
}

Tensor operator*(const Rational& s, const Tensor& t) {
    Tensor out(t.slots_);
    for (size_t k = 0; k < t.comp_.size(); ++k) out.comp_[k] = s * t.comp_[k];
    return out;
}

Tensor contract(const Tensor& t, int slot_a, int slot_b, const FrameManifold& m) {
    const int rank = t.rank();
    if (slot_a < 0 || slot_a >= rank || slot_b < 0 || slot_b >= rank) {
        throw BadSlotError("contraction slot out of range for a rank-" + std::to_string(rank) +
                           " tensor");
    }
    if (slot_a == slot_b) throw BadSlotError("contraction slots must be distinct");
    const int a = std::min(slot_a, slot_b);
    const int b = std::max(slot_a, slot_b);

    const Variance va = t.slot(a);
    const Variance vb = t.slot(b);
    const bool mixed = va != vb;
    // Two covariant slots pair against the inverse metric; two contravariant
    // slots against the metric; a mixed pair is the plain trace.
    const Mat3* pairing = nullptr;
    if (!mixed) {
        pairing = va == Variance::Covariant ? &m.inverse_metric() : &m.metric();
    }

    std::vector<Variance> out_slots;
    for (int s = 0; s < rank; ++s) {
        if (s != a && s != b) out_slots.push_back(t.slot(s));
    }
    Tensor out(out_slots);

    const int out_rank = rank - 2;
    std::vector<int> out_idx(static_cast<size_t>(out_rank), 0);
    std::vector<int> full_idx(static_cast<size_t>(rank), 0);
    const size_t out_count = power_of_dim(out_rank);
    for (size_t flat = 0; flat < out_count; ++flat) {
        size_t rem = flat;
        for (int s = out_rank - 1; s >= 0; --s) {
            out_idx[static_cast<size_t>(s)] = static_cast<int>(rem % kDim);
            rem /= kDim;
        }
        int cursor = 0;
        for (int s = 0; s < rank; ++s) {
            if (s == a || s == b) continue;
            full_idx[static_cast<size_t>(s)] = out_idx[static_cast<size_t>(cursor++)];
        }
        Rational sum = 0;
        for (int p = 0; p < kDim; ++p) {
            full_idx[static_cast<size_t>(a)] = p;
            if (mixed) {
                full_idx[static_cast<size_t>(b)] = p;
                sum += t.at(full_idx);
                continue;
            }
            for (int q = 0; q < kDim; ++q) {
                if (pairing->at(p, q) == 0) continue;
                full_idx[static_cast<size_t>(b)] = q;
                sum += pairing->at(p, q) * t.at(full_idx);
            }
        }
        if (out_rank == 0) {
            out = Tensor::scalar(std::move(sum));
        } else {
            out.at(out_idx) = std::move(sum);
        }
    }
    return out;
}

Rational norm_squared(const Tensor& t, const FrameManifold& m) {
    if (t.rank() != 2 || t.slot(0) != Variance::Covariant || t.slot(1) != Variance::Covariant) {
        throw BadValenceError("norm_squared requires a (0,2) tensor");
    }
    const Mat3& ginv = m.inverse_metric();
    Rational sum = 0;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k) {
                if (ginv.at(i, k) == 0) continue;
                for (int l = 0; l < kDim; ++l) {
                    if (ginv.at(j, l) == 0) continue;
                    sum += ginv.at(i, k) * ginv.at(j, l) * t.at(i, j) * t.at(k, l);
                }
            }
    return sum;
}

} // namespace riemsol
