#ifndef GROTHMN_SHAPES_HPP
#define GROTHMN_SHAPES_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace grothmn
{

// An integer partition, stored without trailing zeros.
class Partition
{
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    // Comma-separated decimal parts, optionally in parentheses as printed by
    // str(). The empty string and "()" are the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int> &parts() const noexcept
    {
        return parts_;
    }
    // Number of nonzero parts.
    int length() const noexcept
    {
        return static_cast<int>(parts_.size());
    }
    int size() const noexcept
    {
        return size_;
    }
    bool empty() const noexcept
    {
        return parts_.empty();
    }
    // 1-based row access; rows past the length are 0.
    int row(int i) const noexcept
    {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    // Parts padded with zeros to exactly n entries. Requires length() <= n.
    std::vector<int> padded(int n) const;

    bool contains(const Partition &inner) const noexcept;
    bool fits_in(int n) const noexcept
    {
        return length() <= n;
    }

    // "(3,2,1)", "()" for the empty partition.
    std::string str() const;
    // "3,2,1", the CLI syntax.
    std::string csv() const;

    friend bool operator==(const Partition &, const Partition &) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Graded order: smaller size first, then larger parts first (reverse lex).
struct GradedLex {
    bool operator()(const Partition &a, const Partition &b) const noexcept;
};

struct Cell {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const Cell &, const Cell &) = default;
};

class SkewShape
{
public:
    SkewShape(Partition outer, Partition inner);

    const Partition &outer() const noexcept
    {
        return outer_;
    }
    const Partition &inner() const noexcept
    {
        return inner_;
    }
    int size() const noexcept
    {
        return outer_.size() - inner_.size();
    }
    bool empty() const noexcept
    {
        return size() == 0;
    }
    bool contains(Cell c) const noexcept;
    // Cells in row-major order.
    std::vector<Cell> cells() const;
    // 1-based indices of the first and last nonempty rows; {0, 0} when empty.
    int top_row() const noexcept;
    int bottom_row() const noexcept;

    std::string str() const;

private:
    Partition outer_;
    Partition inner_;
};

SkewShape skew(const Partition &outer, const Partition &inner);

struct ShapeStats {
    int size = 0;
    int rows_occupied = 0;
    int cols_occupied = 0;
    bool connected = true;
};

ShapeStats shape_stats(const SkewShape &s);

bool is_ribbon(const SkewShape &s);
// Nonempty rows minus one. Throws invalid_input unless s is a ribbon.
int height(const SkewShape &s);

// Size of the largest ribbon mu/lambda with lambda <= mu <= nu. The ribbon is
// the northwest rim: the cells of nu/lambda whose northwest diagonal
// neighbour lies outside nu/lambda. Requires a connected nonempty shape.
int max_nw_ribbon_size(const SkewShape &s);
Partition max_nw_ribbon_outer(const SkewShape &s);

// All nu in P[n] with lambda <= nu, nu/lambda nonempty and connected,
// c(nu/lambda) <= k and max_nw_ribbon_size(nu/lambda) >= k. GradedLex order.
std::vector<Partition> enumerate_mn_outer(const Partition &lambda, int k, int n);

// The subset of enumerate_mn_outer whose skew shape ends in row j.
std::vector<Partition> enumerate_mn_outer_row(const Partition &lambda, int k, int n, int j);

// All nu in P[n] with nu/lambda a ribbon of exactly k cells, found by adding
// k cells in every admissible way and keeping the ribbons. GradedLex order.
std::vector<Partition> enumerate_ribbon_outer(const Partition &lambda, int k, int n);

// All partitions of size m with at most n parts, each part at most max_part
// (pass a negative max_part for no bound). GradedLex order.
std::vector<Partition> partitions_of(int m, int n, int max_part = -1);

// All partitions inside a rows x cols box, optionally with size <= max_size.
std::vector<Partition> partitions_in_box(int rows, int cols, int max_size = -1);

} // namespace grothmn

#endif
