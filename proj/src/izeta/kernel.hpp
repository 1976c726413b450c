/*
 *     Copyright 2026 The izeta Authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
 */

#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "izeta/error.hpp"
#include "izeta/offset.hpp"

namespace izeta {

/// Dense size x size block of a kernel at one lattice offset.
template <class T>
class Block {
public:
    Block() = default;
    explicit Block(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, T(0)) {}

    int size() const { return n_; }
    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != T(0)) return false;
        return true;
    }

    friend bool operator==(const Block& a, const Block& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

private:
    int n_ = 0;
    std::vector<T> a_;
};

/// Translation-equivariant operator with finite support:
/// entry (i, j, v) couples (i, 0) to (j, v). A finite graph is the rank-0
/// case with a single block holding the full matrix.
template <class T>
class Kernel {
public:
    Kernel() = default;
    Kernel(int rank, int size) : rank_(rank), size_(size) {}

    static Kernel identity(int rank, int size) {
        Kernel k(rank, size);
        for (int i = 0; i < size; ++i) k.add(i, i, Offset(rank, 0), T(1));
        return k;
    }

    static Kernel diagonal(int rank, std::span<const T> diag) {
        Kernel k(rank, static_cast<int>(diag.size()));
        for (int i = 0; i < k.size_; ++i)
            if (diag[i] != T(0)) k.add(i, i, Offset(rank, 0), diag[i]);
        return k;
    }

    int rank() const { return rank_; }
    int size() const { return size_; }
    const std::map<Offset, Block<T>>& blocks() const { return blocks_; }

    T coef(int i, int j, const Offset& v) const {
        auto it = blocks_.find(v);
        return it == blocks_.end() ? T(0) : it->second(i, j);
    }

    void add(int i, int j, const Offset& v, const T& x) {
        auto [it, inserted] = blocks_.try_emplace(v, size_);
        it->second(i, j) += x;
    }

    Kernel& operator+=(const Kernel& o) {
        check_compatible(o);
        for (const auto& [v, b] : o.blocks_) {
            auto [it, inserted] = blocks_.try_emplace(v, size_);
            for (int i = 0; i < size_; ++i)
                for (int j = 0; j < size_; ++j) it->second(i, j) += b(i, j);
        }
        drop_zeros();
        return *this;
    }

    Kernel& operator-=(const Kernel& o) {
        check_compatible(o);
        for (const auto& [v, b] : o.blocks_) {
            auto [it, inserted] = blocks_.try_emplace(v, size_);
            for (int i = 0; i < size_; ++i)
                for (int j = 0; j < size_; ++j) it->second(i, j) -= b(i, j);
        }
        drop_zeros();
        return *this;
    }

    Kernel scaled(const T& s) const {
        Kernel r = *this;
        for (auto& [v, b] : r.blocks_)
            for (int i = 0; i < size_; ++i)
                for (int j = 0; j < size_; ++j) b(i, j) *= s;
        r.drop_zeros();
        return r;
    }

    friend Kernel operator+(Kernel a, const Kernel& b) { return a += b; }
    friend Kernel operator-(Kernel a, const Kernel& b) { return a -= b; }

    /// (S T)(i, j, v) = sum_{k, w} S(i, k, w) T(k, j, v - w).
    friend Kernel operator*(const Kernel& s, const Kernel& t) {
        s.check_compatible(t);
        Kernel r(s.rank_, s.size_);
        const int n = s.size_;
        for (const auto& [w, sb] : s.blocks_) {
            for (const auto& [x, tb] : t.blocks_) {
                auto [it, inserted] = r.blocks_.try_emplace(w + x, n);
                Block<T>& rb = it->second;
                for (int i = 0; i < n; ++i)
                    for (int k = 0; k < n; ++k) {
                        const T& a = sb(i, k);
                        if (a == T(0)) continue;
                        for (int j = 0; j < n; ++j) rb(i, j) += a * tb(k, j);
                    }
            }
        }
        r.drop_zeros();
        return r;
    }

    /// Sum of offset-0 diagonal entries over the given index set.
    T trace_over(std::span<const int> domain) const {
        T s(0);
        auto it = blocks_.find(Offset(rank_, 0));
        if (it == blocks_.end()) return s;
        for (int x : domain) s += it->second(x, x);
        return s;
    }

    /// coef(i, j, v) == coef(j, i, -v) everywhere.
    bool is_symmetric() const {
        for (const auto& [v, b] : blocks_) {
            auto it = blocks_.find(-v);
            for (int i = 0; i < size_; ++i)
                for (int j = 0; j < size_; ++j) {
                    T other = it == blocks_.end() ? T(0) : it->second(j, i);
                    if (b(i, j) != other) return false;
                }
        }
        return true;
    }

    /// Keeps only offsets accepted by the predicate.
    template <class Pred>
    Kernel pruned(Pred keep) const {
        Kernel r(rank_, size_);
        for (const auto& [v, b] : blocks_)
            if (keep(v)) r.blocks_.emplace(v, b);
        return r;
    }

    template <class U, class Conv>
    Kernel<U> converted(Conv conv) const {
        Kernel<U> r(rank_, size_);
        for (const auto& [v, b] : blocks_)
            for (int i = 0; i < size_; ++i)
                for (int j = 0; j < size_; ++j)
                    if (b(i, j) != T(0)) r.add(i, j, v, conv(b(i, j)));
        return r;
    }

    bool is_zero() const { return blocks_.empty(); }

    friend bool operator==(const Kernel& a, const Kernel& b) {
        return a.rank_ == b.rank_ && a.size_ == b.size_ && a.blocks_ == b.blocks_;
    }

private:
    void check_compatible(const Kernel& o) const {
        if (o.rank_ != rank_ || o.size_ != size_)
            fail(ErrorCode::ActionMismatch, "kernels live on different actions (rank " +
                                                std::to_string(rank_) + "/" + std::to_string(o.rank_) +
                                                ", size " + std::to_string(size_) + "/" +
                                                std::to_string(o.size_) + ")");
    }

    void drop_zeros() {
        for (auto it = blocks_.begin(); it != blocks_.end();) {
            if (it->second.is_zero())
                it = blocks_.erase(it);
            else
                ++it;
        }
    }

    int rank_ = 0;
    int size_ = 0;
    std::map<Offset, Block<T>> blocks_;
};

} // namespace izeta
