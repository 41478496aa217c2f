#ifndef GROTHMN_TABLEAUX_HPP
#define GROTHMN_TABLEAUX_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <grothmn/shapes.hpp>

namespace grothmn
{

// A hook-shaped semistandard filling of one box: head h, arm a_1 <= ... <= a_r
// to its right with h <= a_1, and leg h < b_1 < ... < b_l below it.
struct HookEntry {
    int head = 1;
    std::vector<int> arm;
    std::vector<int> leg;

    int min() const noexcept
    {
        return head;
    }
    int max() const noexcept;
    int entry_count() const noexcept
    {
        return 1 + static_cast<int>(arm.size() + leg.size());
    }
    bool valid() const noexcept;

    friend bool operator==(const HookEntry &, const HookEntry &) = default;
};

class HookValuedTableau
{
public:
    HookValuedTableau() = default;
    // rows[i][j] fills cell (i+1, j+1). The row lengths must form a partition.
    explicit HookValuedTableau(std::vector<std::vector<HookEntry>> rows);

    const Partition &shape() const noexcept
    {
        return shape_;
    }
    const std::vector<std::vector<HookEntry>> &rows() const noexcept
    {
        return rows_;
    }
    const HookEntry &at(Cell c) const;

    friend bool operator==(const HookValuedTableau &, const HookValuedTableau &) = default;

private:
    friend class TableauEnumerator;

    Partition shape_;
    std::vector<std::vector<HookEntry>> rows_;
};

// Every entry is a valid hook; rows weakly increase (max <= next min) and
// columns strictly increase (max < next min).
bool is_valid(const HookValuedTableau &t);

struct TableauStats {
    std::vector<int> weight;
    int arm_total = 0;
    int leg_total = 0;
    int total_entries = 0;
};

// Throws invalid_input if an entry exceeds n.
TableauStats statistics(const HookValuedTableau &t, int n);

enum class TableauFamily { ssyt, svt, hvt };

// Streams every tableau of the family with shape lambda and entries <= n.
// The hvt family needs a cap: only tableaux with total_entries <= cap are
// produced. A cap also bounds the other families when given.
void for_each_tableau(const Partition &lambda, int n, TableauFamily family, std::optional<int> cap,
                      const std::function<void(const HookValuedTableau &)> &visit);

std::uint64_t count_tableaux(const Partition &lambda, int n, TableauFamily family, std::optional<int> cap);

std::vector<HookValuedTableau> enumerate_ssyt(const Partition &lambda, int n);
std::vector<HookValuedTableau> enumerate_svt(const Partition &lambda, int n);
std::vector<HookValuedTableau> enumerate_hvt_capped(const Partition &lambda, int n, int cap);

// Text encoding: one token per box, "h" or "h(arm|leg)" e.g. "1(12|3)",
// tokens separated by spaces, rows by "/". A box whose arm or leg holds a
// value above 9 writes each of those values followed by a comma instead,
// e.g. "9(10,11,|12,)".
std::string to_text(const HookValuedTableau &t);
HookValuedTableau parse_tableau(std::string_view text);

} // namespace grothmn

#endif
