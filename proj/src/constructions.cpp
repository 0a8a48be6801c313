#include "dsg/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace dsg {

namespace {

[[noreturn]] void unsupported(const std::string& what) { throw std::invalid_argument(what); }

void append(std::vector<int>& seq, int value, long long times) {
    seq.insert(seq.end(), static_cast<size_t>(times), value);
}

Construction finish(GraphPtr g, std::vector<int> labels, int t, std::string name, std::string note) {
    Construction c{assignment_from_labels(std::move(g), std::move(labels), t), std::move(name), std::move(note)};
    // every generator here is supposed to emit an equitable assignment
    if (!c.assignment.partition.equitable)
        throw std::logic_error(c.name + ": generated counts are not equitable (construction bug)");
    return c;
}

// ---- optimal patterns ------------------------------------------------------

Construction optimal_cycle(long long n, int t) {
    if (n % t != 0) unsupported("cycle optimum needs t | n");
    auto g = build_cycle(n);
    std::vector<int> labels(n);
    for (long long v = 0; v < n; ++v) labels[v] = static_cast<int>(v % t) + 1;
    return finish(std::move(g), std::move(labels), t, "cycle-optimal", "repeating 1..t");
}

Construction optimal_cylinder(long long n, int t) {
    auto g = build_cylinder(n);
    long long cols = n / 2;
    if (cols % t != 0) unsupported("cylinder optimum needs t | n/2");
    int shift = t / 2; // >= 1, < t, so vertical edges stay colorful
    std::vector<int> labels(n);
    for (long long c = 0; c < cols; ++c) {
        labels[c] = static_cast<int>(c % t) + 1;
        labels[cols + c] = static_cast<int>((c + shift) % t) + 1;
    }
    return finish(std::move(g), std::move(labels), t, "cylinder-optimal",
                  "second row shifted by " + std::to_string(shift));
}

Construction optimal_torus(long long n, int t) {
    auto g = build_torus(n);
    long long side = static_cast<long long>(std::llround(std::sqrt((double)n)));
    std::vector<int> labels(n);
    if (t == 2) {
        if (side % 2 != 0) unsupported("torus optimum for t=2 needs even side");
        for (long long r = 0; r < side; ++r)
            for (long long c = 0; c < side; ++c) labels[r * side + c] = static_cast<int>((r + c) % 2) + 1;
        return finish(std::move(g), std::move(labels), t, "torus-optimal", "checkerboard");
    }
    if (side % t != 0) unsupported("torus optimum needs t | side");
    for (long long r = 0; r < side; ++r)
        for (long long c = 0; c < side; ++c)
            labels[r * side + c] = static_cast<int>((c + 2 * r) % t) + 1;
    return finish(std::move(g), std::move(labels), t, "torus-optimal", "rows shifted by 2");
}

// ---- worst patterns: binary utility ---------------------------------------

// '112' repeated k/2 times, then k/2 twos
Construction cycle_binary_two(long long n) {
    long long k = n / 2;
    if (n % 2 != 0 || k % 2 != 0) unsupported("cycle binary worst (t=2) needs 4 | n");
    std::vector<int> seq;
    for (long long i = 0; i < k / 2; ++i) { append(seq, 1, 2); append(seq, 2, 1); }
    append(seq, 2, k / 2);
    return finish(build_cycle(n), std::move(seq), 2, "cycle-binary-worst-t2", "112-blocks then a 2-block");
}

// '11 22 .. (t-1)(t-1)' repeated k/2 times, then k agents of type t
std::vector<int> paired_stripes_row(long long k, int t) {
    std::vector<int> seq;
    for (long long i = 0; i < k / 2; ++i)
        for (int c = 1; c < t; ++c) append(seq, c, 2);
    append(seq, t, k);
    return seq;
}

Construction cycle_binary_multi(long long n, int t) {
    if (n % t != 0) unsupported("cycle binary worst needs t | n");
    long long k = n / t;
    if (k % 2 != 0) unsupported("cycle binary worst needs even n/t");
    return finish(build_cycle(n), paired_stripes_row(k, t), t, "cycle-binary-worst",
                  "doubled stripes then a segregated block");
}

Construction cylinder_binary_two(long long n) {
    auto g = build_cylinder(n);
    long long k = n / 2; // columns
    if (k % 6 != 0) unsupported("cylinder binary worst (t=2) needs n/2 divisible by 6");
    long long pattern_cols = 2 * k / 3;
    std::vector<int> labels(n);
    for (long long c = 0; c < k; ++c) {
        labels[c] = (c < pattern_cols) ? (c % 4 == 0 ? 2 : 1) : 2;
        labels[k + c] = (c < pattern_cols) ? (c % 4 == 2 ? 2 : 1) : 2;
    }
    return finish(std::move(g), std::move(labels), 2, "cylinder-binary-worst-t2",
                  "sparse 2s over two thirds, 2-block on the rest");
}

Construction cylinder_binary_multi(long long n, int t) {
    auto g = build_cylinder(n);
    long long cols = n / 2;
    if (cols % t != 0) unsupported("cylinder binary worst needs t | n/2");
    long long k0 = cols / t;
    if (k0 % 2 != 0) unsupported("cylinder binary worst needs even (n/2)/t");
    auto row = paired_stripes_row(k0, t);
    std::vector<int> labels(n);
    for (long long c = 0; c < cols; ++c) labels[c] = labels[cols + c] = row[c];
    return finish(std::move(g), std::move(labels), t, "cylinder-binary-worst",
                  "same striped row twice");
}

Construction torus_binary_two(long long n) {
    auto g = build_torus(n);
    long long side = static_cast<long long>(std::llround(std::sqrt((double)n)));
    if (side % 40 != 0) unsupported("torus binary worst (t=2) needs side divisible by 40");
    long long i = side / 8;
    std::vector<int> labels(n);
    for (long long r = 0; r < side; ++r)
        for (long long c = 0; c < side; ++c) {
            bool two = (c < 5 * i) ? (c % 5 == (2 * r + 4) % 5) : true;
            labels[r * side + c] = two ? 2 : 1;
        }
    return finish(std::move(g), std::move(labels), 2, "torus-binary-worst-t2",
                  "isolated 2s on a period-5 lattice plus a 2-block");
}

Construction torus_binary_multi(long long n, int t) {
    auto g = build_torus(n);
    long long side = static_cast<long long>(std::llround(std::sqrt((double)n)));
    if (side % t != 0) unsupported("torus binary worst needs t | side");
    long long k0 = side / t;
    if (k0 % 2 != 0) unsupported("torus binary worst needs even side/t");
    auto row = paired_stripes_row(k0, t);
    std::vector<int> labels(n);
    for (long long r = 0; r < side; ++r)
        for (long long c = 0; c < side; ++c) labels[r * side + c] = row[c];
    return finish(std::move(g), std::move(labels), t, "torus-binary-worst",
                  "same striped row in every row");
}

// ---- worst patterns: variety (and multi-type difference) welfare ----------

struct Block {
    int first = 0, second = 0; // alternating pair; first == second for a solid block
    long long len = 0;
};

// pair blocks that leave one segregated type; used on cycles and as the row
// generator for cylinders/tori
std::vector<Block> alternating_pair_blocks(long long k, int t) {
    std::vector<Block> blocks;
    if (t % 2 == 1) {
        for (int c = 1; c + 1 < t; c += 2) blocks.push_back({c, c + 1, 2 * k});
    } else {
        if (k % 2 != 0) unsupported("alternating-pair pattern for even t needs even n/t");
        blocks.push_back({1, 2, k});
        blocks.push_back({1, 3, k});
        blocks.push_back({2, 3, k});
        for (int c = 4; c + 1 < t; c += 2) blocks.push_back({c, c + 1, 2 * k});
    }
    blocks.push_back({t, t, k});
    return blocks;
}

std::vector<int> blocks_row(const std::vector<Block>& blocks, bool swapped) {
    std::vector<int> row;
    for (const auto& b : blocks)
        for (long long o = 0; o < b.len; ++o) {
            bool even = o % 2 == 0;
            row.push_back(even == !swapped ? b.first : b.second);
        }
    return row;
}

Construction cycle_variety_welfare(long long n, int t) {
    if (t < 3) unsupported("pair-block worst pattern needs t >= 3");
    if (n % t != 0) unsupported("cycle variety worst needs t | n");
    long long k = n / t;
    auto row = blocks_row(alternating_pair_blocks(k, t), false);
    return finish(build_cycle(n), std::move(row), t, "cycle-variety-worst",
                  "alternating pair blocks, one segregated type");
}

Construction cylinder_variety_welfare(long long n, int t) {
    if (t < 3) unsupported("pair-block worst pattern needs t >= 3");
    auto g = build_cylinder(n);
    long long cols = n / 2;
    if (cols % t != 0) unsupported("cylinder variety worst needs t | n/2");
    auto blocks = alternating_pair_blocks(cols / t, t);
    auto top = blocks_row(blocks, false);
    auto bottom = blocks_row(blocks, true);
    std::vector<int> labels(n);
    for (long long c = 0; c < cols; ++c) {
        labels[c] = top[c];
        labels[cols + c] = bottom[c];
    }
    return finish(std::move(g), std::move(labels), t, "cylinder-variety-worst",
                  "pair blocks, partners exchanged between rows");
}

Construction torus_variety_welfare(long long n, int t) {
    if (t < 3) unsupported("pair-block worst pattern needs t >= 3");
    auto g = build_torus(n);
    long long side = static_cast<long long>(std::llround(std::sqrt((double)n)));
    if (side % t != 0) unsupported("torus variety worst needs t | side");
    if (side % 2 != 0) unsupported("torus variety worst needs even side");
    auto blocks = alternating_pair_blocks(side / t, t);
    auto top = blocks_row(blocks, false);
    auto bottom = blocks_row(blocks, true);
    std::vector<int> labels(n);
    for (long long r = 0; r < side; ++r)
        for (long long c = 0; c < side; ++c)
            labels[r * side + c] = (r % 2 == 0 ? top : bottom)[c];
    return finish(std::move(g), std::move(labels), t, "torus-variety-worst",
                  "pair blocks, partners exchanged between alternating rows");
}

// ---- worst patterns: difference utility, two types ------------------------

Construction cycle_difference_two(long long n) {
    long long k = n / 2;
    if (n % 2 != 0 || k % 3 != 0 || k < 6) unsupported("cycle difference worst (t=2) needs 6 | n and n >= 12");
    std::vector<int> seq;
    for (long long i = 0; i < k / 3 - 1; ++i) { seq.push_back(1); seq.push_back(1); seq.push_back(2); }
    seq.insert(seq.end(), {1, 2, 1});
    for (long long i = 0; i < k / 3 - 1; ++i) { seq.push_back(2); seq.push_back(2); seq.push_back(1); }
    seq.insert(seq.end(), {2, 1, 2});
    return finish(build_cycle(n), std::move(seq), 2, "cycle-difference-worst-t2",
                  "112-blocks and 221-blocks with stitch triples");
}

Construction cylinder_difference_two(long long n) {
    auto g = build_cylinder(n);
    long long cols = n / 2;
    if (cols % 2 != 0) unsupported("cylinder difference worst (t=2) needs even n/2");
    std::vector<int> labels(n);
    for (long long c = 0; c < cols; ++c) labels[c] = labels[cols + c] = static_cast<int>(c % 2) + 1;
    return finish(std::move(g), std::move(labels), 2, "cylinder-difference-worst-t2",
                  "same alternating row twice");
}

Construction torus_difference_two(long long n) {
    auto g = build_torus(n);
    long long side = static_cast<long long>(std::llround(std::sqrt((double)n)));
    if (side % 10 != 0) unsupported("torus difference worst (t=2) needs side divisible by 10");
    static const int seq_even[10] = {2, 1, 1, 2, 2, 1, 2, 2, 1, 2};
    static const int seq_odd[10] = {2, 1, 1, 2, 1, 1, 2, 2, 1, 1};
    std::vector<int> labels(n);
    for (long long r = 0; r < side; ++r) {
        const int* base = (r % 2 == 0) ? seq_even : seq_odd;
        for (long long c = 0; c < side; ++c)
            labels[r * side + c] = base[((c - r) % 10 + 10) % 10];
    }
    return finish(std::move(g), std::move(labels), 2, "torus-difference-worst-t2",
                  "two period-10 row words, shifted right by one per row");
}

// ---- worst patterns: colorful-edge minimizers for t = 3 -------------------

Construction cycle_variety_colorful(long long n, int t) {
    if (t != 3) unsupported("cycle colorful-edge worst is defined for t = 3");
    if (n % 3 != 0) unsupported("needs 3 | n");
    long long k = n / 3;
    if (k % 4 != 0 || k < 4) unsupported("cycle colorful-edge worst needs 4 | n/3");
    std::vector<int> seq;
    for (long long i = 0; i < k / 2 - 1; ++i) seq.insert(seq.end(), {1, 2, 1});
    for (long long i = 0; i < k / 4; ++i) seq.insert(seq.end(), {2, 3, 2});
    seq.insert(seq.end(), {1, 2, 1});
    append(seq, 3, 3 * k / 4);
    return finish(build_cycle(n), std::move(seq), 3, "cycle-colorful-worst-t3",
                  "121 and 232 triples with a 3-block");
}

// Claw tiling of the cylinder: tile tau has center (tau%2, 2*tau) and covers
// the two horizontal neighbors plus the vertical partner of the center.
// Classes: R = 3-center/2-ring, B = 2-center/1-ring, G = all 3s; converted G
// tiles carry a type-1 center to make the counts exactly equitable.
Construction cylinder_variety_colorful(long long n, int t) {
    if (t != 3) unsupported("cylinder colorful-edge worst is defined for t = 3");
    if (n % 3 != 0) unsupported("needs 3 | n");
    long long k = n / 3;
    if (k % 8 != 0) unsupported("cylinder colorful-edge worst needs 8 | n/3");
    long long cols = n / 2;
    long long tiles = cols / 2;
    long long b = k / 3;
    while (b > 0 && (k - b) % 3 != 0) --b;
    long long r = (k - b) / 3;
    long long g_tiles = tiles - b - r;
    long long converted = k - 3 * b;
    if (b < 2 || r < 1 || g_tiles < std::max<long long>(converted, 1))
        unsupported("cylinder colorful-edge worst needs a larger instance");
    long long b1 = (b + 1) / 2;

    auto graph = build_cylinder(n);
    std::vector<int> labels(n, 0);
    auto cell = [cols](long long row, long long col) {
        return row * cols + ((col % cols + cols) % cols);
    };
    long long conv_start = r + b1 + (g_tiles - converted) / 2;
    for (long long tau = 0; tau < tiles; ++tau) {
        long long row = tau % 2, col = 2 * tau;
        int center, ring;
        if (tau < r) { center = 3; ring = 2; }                       // R band
        else if (tau < r + b1) { center = 2; ring = 1; }             // B1 band
        else if (tau < r + b1 + g_tiles) {                           // G band
            bool conv = tau >= conv_start && tau < conv_start + converted;
            center = conv ? 1 : 3;
            ring = 3;
        } else { center = 2; ring = 1; }                             // B2 band
        labels[cell(row, col)] = center;
        labels[cell(row, col - 1)] = ring;
        labels[cell(row, col + 1)] = ring;
        labels[cell(1 - row, col)] = ring;
    }
    return finish(std::move(graph), std::move(labels), 3, "cylinder-colorful-worst-t3",
                  "claw tiling, tiles r=" + std::to_string(r) + " b=" + std::to_string(b) +
                      " g=" + std::to_string(g_tiles) + " converted=" + std::to_string(converted));
}

// Plus-pentomino tiling of the torus via the perfect code c = 2r (mod 5).
// Tile (rho, j) is banded by its row-major index; band order B R B G keeps
// the all-3 tiles away from the 2-ring tiles.
Construction torus_variety_colorful(long long n, int t) {
    if (t != 3) unsupported("torus colorful-edge worst is defined for t = 3");
    auto graph = build_torus(n);
    long long side = static_cast<long long>(std::llround(std::sqrt((double)n)));
    if (side % 60 != 0) unsupported("torus colorful-edge worst needs side divisible by 60");
    long long k = n / 3;
    long long w = side / 5;
    long long b = k / 4, r = 3 * k / 16, g_tiles = 13 * k / 80;
    long long b1 = b / 2, b2 = b - b1;
    if (b1 + r + b2 + g_tiles != side * w)
        throw std::logic_error("pentomino tile accounting is off (construction bug)");

    std::vector<int> labels(n, 0);
    auto cell = [side](long long row, long long col) {
        return ((row % side + side) % side) * side + ((col % side + side) % side);
    };
    for (long long rho = 0; rho < side; ++rho)
        for (long long j = 0; j < w; ++j) {
            long long idx = rho * w + j;
            int center, ring;
            if (idx < b1) { center = 2; ring = 1; }
            else if (idx < b1 + r) { center = 3; ring = 2; }
            else if (idx < b1 + r + b2) { center = 2; ring = 1; }
            else { center = 3; ring = 3; }
            long long col = (2 * rho + 5 * j) % side;
            labels[cell(rho, col)] = center;
            labels[cell(rho - 1, col)] = ring;
            labels[cell(rho + 1, col)] = ring;
            labels[cell(rho, col - 1)] = ring;
            labels[cell(rho, col + 1)] = ring;
        }
    return finish(std::move(graph), std::move(labels), 3, "torus-colorful-worst-t3",
                  "pentomino tiling, tiles r=" + std::to_string(r) + " b=" + std::to_string(b) +
                      " g=" + std::to_string(g_tiles));
}

} // namespace

Family family_from_name(const std::string& name) {
    if (name == "cycle") return Family::Cycle;
    if (name == "cylinder") return Family::Cylinder;
    if (name == "torus") return Family::Torus;
    throw std::invalid_argument("unknown family '" + name + "' (cycle|cylinder|torus)");
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Cycle: return "cycle";
        case Family::Cylinder: return "cylinder";
        case Family::Torus: return "torus";
    }
    return "?";
}

Construction optimal_assignment(Family family, long long n, int t) {
    if (t < 2) unsupported("optimal assignment needs t >= 2");
    switch (family) {
        case Family::Cycle: return optimal_cycle(n, t);
        case Family::Cylinder: return optimal_cylinder(n, t);
        case Family::Torus: return optimal_torus(n, t);
    }
    unsupported("bad family");
}

Construction worst_assignment(Family family, Utility kind, Target target, long long n, int t) {
    if (t < 2) unsupported("worst assignment needs t >= 2");
    if (kind == Utility::Similarity) unsupported("worst-case patterns exist for the diversity utilities only");
    if (t == 2 && kind == Utility::Variety) kind = Utility::Binary; // identical games for two types

    switch (family) {
        case Family::Cycle:
            if (kind == Utility::Binary)
                return t == 2 ? cycle_binary_two(n) : cycle_binary_multi(n, t);
            if (kind == Utility::Difference)
                return t == 2 ? cycle_difference_two(n) : cycle_variety_welfare(n, t);
            return target == Target::Welfare ? cycle_variety_welfare(n, t)
                                             : cycle_variety_colorful(n, t);
        case Family::Cylinder:
            if (kind == Utility::Binary)
                return t == 2 ? cylinder_binary_two(n) : cylinder_binary_multi(n, t);
            if (kind == Utility::Difference)
                return t == 2 ? cylinder_difference_two(n) : cylinder_variety_welfare(n, t);
            return target == Target::Welfare ? cylinder_variety_welfare(n, t)
                                             : cylinder_variety_colorful(n, t);
        case Family::Torus:
            if (kind == Utility::Binary)
                return t == 2 ? torus_binary_two(n) : torus_binary_multi(n, t);
            if (kind == Utility::Difference)
                return t == 2 ? torus_difference_two(n) : torus_variety_welfare(n, t);
            return target == Target::Welfare ? torus_variety_welfare(n, t)
                                             : torus_variety_colorful(n, t);
    }
    unsupported("bad family");
}

Construction gstar_assignment(int t, int delta, long long k, bool optimal) {
    GstarLayout lay;
    auto g = build_gstar(t, delta, k, &lay);
    long long q = lay.q;
    std::vector<int> labels(g->n(), 0);

    if (optimal) {
        if ((delta - 1) % t != 0) unsupported("gstar optimum needs t | (delta-1)");
        if (q % t != 0) unsupported("gstar optimum needs t | k/2");
        long long blk = (delta - 1) / t;
        long long period = blk * t;
        long long rem = q % period;      // distributed as one short cycle of blocks
        long long rem_blk = rem / t;
        std::vector<int> pattern;
        pattern.reserve(q);
        for (long long i = 0; i < q / period; ++i)
            for (int c = 1; c <= t; ++c) append(pattern, c, blk);
        for (int c = 1; c <= t; ++c) append(pattern, c, rem_blk);
        for (int copy = 0; copy < t; ++copy)
            for (long long j = 0; j < q; ++j) {
                labels[lay.a(copy, j)] = pattern[j];
                labels[lay.b(copy, j)] = pattern[j] % t + 1;
            }
        return finish(std::move(g), std::move(labels), t, "gstar-optimal",
                      "type blocks of " + std::to_string(blk) + (rem ? " with a short closing cycle" : ""));
    }

    // worst: one type per part, walking 1..t-1 twice around the chained
    // copies; the last copy is filled with type t
    std::vector<int> slots;
    for (int rep = 0; rep < 2; ++rep)
        for (int c = 1; c < t; ++c) slots.push_back(c);
    for (int copy = 0; copy < t - 1; ++copy) {
        int xa = slots[2 * copy], yb = slots[2 * copy + 1];
        for (long long j = 0; j < q; ++j) {
            labels[lay.a(copy, j)] = xa;
            labels[lay.b(copy, j)] = yb;
        }
    }
    for (long long j = 0; j < q; ++j) {
        labels[lay.a(t - 1, j)] = t;
        labels[lay.b(t - 1, j)] = t;
    }
    return finish(std::move(g), std::move(labels), t, "gstar-worst",
                  "single-type parts, one fully segregated copy");
}

} // namespace dsg
