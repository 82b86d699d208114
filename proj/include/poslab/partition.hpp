#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace poslab {

/// Weakly decreasing sequence of positive integers. Normalized: trailing
/// zeros are stripped at construction, so the empty partition is the unique
/// representation of "no parts" and equality is plain vector equality.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) {
        while (!parts.empty() && parts.back() == 0)
            parts.pop_back();
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
        parts_ = std::move(parts);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    int size() const {
        int s = 0;
        for (int p : parts_)
            s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Total bitlength of all parts.
    int bitlength() const {
        int b = 0;
        for (int p : parts_) {
            int v = p, n = 0;
            while (v > 0) {
                v >>= 1;
                ++n;
            }
            b += n;
        }
        return b;
    }

    /// 1-based part access, 0 beyond the length.
    int part(int i) const {
        if (i < 1)
            throw std::out_of_range("Partition::part: index is 1-based");
        return i <= length() ? parts_[i - 1] : 0;
    }

    const std::vector<int>& parts() const { return parts_; }

    /// Componentwise scaling (k*lambda), k >= 0.
    Partition scaled(int k) const {
        if (k < 0)
            throw std::invalid_argument("Partition::scaled: negative factor");
        if (k == 0)
            return Partition();
        std::vector<int> p(parts_);
        for (int& x : p)
            x *= k;
        return Partition(std::move(p));
    }

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

  private:
    std::vector<int> parts_;
};

/// Transpose of the Young diagram.
inline Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    if (!p.empty())
        cols.assign(p.parts()[0], 0);
    for (int row : p.parts())
        for (int c = 0; c < row; ++c)
            ++cols[c];
    return Partition(std::move(cols));
}

/// True iff the diagram of inner fits inside the diagram of outer.
inline bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length())
        return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > outer.part(i))
            return false;
    return true;
}

/// Skew diagram outer/inner; straight shapes use an empty inner.
/// Cells of row r (1-based) are the columns inner_r < c <= outer_r.
class SkewShape {
  public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner)
        : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!contains(outer_, inner_))
            throw std::invalid_argument("SkewShape: inner does not fit inside outer");
    }
    explicit SkewShape(Partition outer) : SkewShape(std::move(outer), Partition()) {}

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    int rows() const { return outer_.length(); }
    int row_begin(int r) const { return inner_.part(r); } // cells at cols row_begin < c <= row_end
    int row_end(int r) const { return outer_.part(r); }
    int row_cells(int r) const { return row_end(r) - row_begin(r); }

    int cell_count() const { return outer_.size() - inner_.size(); }

    friend bool operator==(const SkewShape& a, const SkewShape& b) = default;

  private:
    Partition outer_, inner_;
};

/// All partitions of n, optionally restricted to at most max_len parts,
/// in descending lexicographic order ((n) first, (1,...,1) last).
std::vector<Partition> partitions_of(int n, int max_len = -1);

/// A filling of a (skew) Young diagram by positive integers. Row r stores
/// only the cells present in the shape, left to right.
class Numbering {
  public:
    Numbering() = default;
    Numbering(SkewShape shape, std::vector<std::vector<int>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {
        if (static_cast<int>(rows_.size()) != shape_.rows())
            throw std::invalid_argument("Numbering: row count differs from shape");
        for (int r = 1; r <= shape_.rows(); ++r) {
            if (static_cast<int>(rows_[r - 1].size()) != shape_.row_cells(r))
                throw std::invalid_argument("Numbering: row length differs from shape");
            for (int v : rows_[r - 1])
                if (v <= 0)
                    throw std::invalid_argument("Numbering: entries must be positive");
        }
    }

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// Entry at 1-based (row, col) in diagram coordinates; the cell must exist.
    int at(int r, int c) const { return rows_[r - 1][c - 1 - shape_.row_begin(r)]; }

    /// Multiplicity vector of values 1..max (max = largest entry).
    std::vector<int> content() const {
        std::vector<int> cnt;
        for (const auto& row : rows_)
            for (int v : row) {
                if (v > static_cast<int>(cnt.size()))
                    cnt.resize(v, 0);
                ++cnt[v - 1];
            }
        return cnt;
    }

    friend bool operator==(const Numbering& a, const Numbering& b) = default;

  private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

} // namespace poslab
