#include "rbmod/error.hpp"
#include "rbmod/structure.hpp"

#include <string>
#include <utility>

namespace rbmod {

namespace {

DenseMatrix diag(std::initializer_list<long> values) {
  std::vector<Rational> d(values.begin(), values.end());
  return DenseMatrix::diagonal(d);
}

DenseMatrix sum(std::initializer_list<DenseMatrix> blocks) {
  std::vector<DenseMatrix> v(blocks);
  return direct_sum(v);
}

// Sample A: the free cell (r, c) carries r + 1, every other entry is 0.
CatalogEntry make(std::string family, std::string description, DenseMatrix B,
                  std::vector<Cell> cells, Flavor flavor = Flavor::XKx) {
  const auto n = B.rows();
  DenseMatrix A(n, n);
  for (const auto& c : cells) A(c.row, c.col) = static_cast<long>(c.row + 1);
  CatalogEntry e{std::move(family), std::move(description),
                 ModulePair::make(std::move(A), std::move(B), flavor), std::move(cells), 0};
  e.free_parameters = e.free_cells.size();
  return e;
}

std::vector<Cell> rows(std::size_t n, std::initializer_list<std::size_t> which) {
  std::vector<Cell> out;
  for (auto r : which)
    for (std::size_t c = 0; c < n; ++c) out.push_back({r, c});
  return out;
}

std::vector<Cell> columns(std::size_t n, std::initializer_list<std::size_t> which) {
  std::vector<Cell> out;
  for (std::size_t r = 0; r < n; ++r)
    for (auto c : which) out.push_back({r, c});
  return out;
}

std::vector<Cell> row_and_last_column(std::size_t n) {
  auto out = rows(n, {0});
  for (std::size_t r = 1; r < n; ++r) out.push_back({r, n - 1});
  return out;
}

std::vector<CatalogEntry> xkx_one() {
  return {
      make("(i)", "B = 0; A = [a] arbitrary", diag({0}), {{0, 0}}),
      make("(ii)", "B = -1; A = [a] arbitrary", diag({-1}), {{0, 0}}),
      make("(iii)", "B = b with b not in {-1, 0}; A = 0", diag({2}), {}),
  };
}

std::vector<CatalogEntry> xkx_two() {
  return {
      make("(i)", "B = 0; A arbitrary", DenseMatrix(2, 2), columns(2, {0, 1})),
      make("(ii)", "B = -I; A arbitrary", diag({-1, -1}), rows(2, {0, 1})),
      make("(iii)", "B with no eigenvalue in {-1, 0}; A = 0", DenseMatrix{{2, 1}, {0, 3}}, {}),
      make("(iv)", "B = diag(0, b2), b2 not in {-1, 0}; A = [[a1, 0], [a3, 0]]", diag({0, 2}),
           columns(2, {0})),
      make("(v)", "B = diag(-1, 0); A = [[a1, a2], [0, a4]]", diag({-1, 0}),
           {{0, 0}, {0, 1}, {1, 1}}),
      make("(vi)", "B = diag(-1, b2), b2 not in {-1, 0}; A = [[a1, a2], [0, 0]]", diag({-1, 2}),
           rows(2, {0})),
      make("(vii)", "B = J_2(0); A = [[0, a2], [0, a4]]", jordan_block(2, 0), columns(2, {1})),
      make("(viii)", "B = J_2(-1); A = [[a1, a2], [0, 0]]", jordan_block(2, -1), rows(2, {0})),
  };
}

std::vector<CatalogEntry> xkx_three() {
  const DenseMatrix j2m = jordan_block(2, -1);
  const DenseMatrix j20 = jordan_block(2, 0);
  return {
      make("(1)", "B = diag(-1, -1, b3); rows 1 and 2 of A free", diag({-1, -1, 2}),
           rows(3, {0, 1})),
      make("(2a)", "B = J_2(-1) + (b3); row 1 of A free", sum({j2m, diag({2})}), rows(3, {0})),
      make("(2b)", "B = diag(-1, b2, b3); row 1 of A free", diag({-1, 2, 3}), rows(3, {0})),
      make("(2c)", "B = J_3(-1); row 1 of A free", jordan_block(3, -1), rows(3, {0})),
      make("(3)", "B = diag(0, b2, b3); column 1 of A free", diag({0, 2, 3}), columns(3, {0})),
      make("(4)", "B = J_2(0) + (b3); column 2 of A free", sum({j20, diag({2})}), columns(3, {1})),
      make("(5a)", "B = diag(b1, b2, b3) with no eigenvalue in {-1, 0}; A = 0", diag({2, 3, 5}), {}),
      make("(5b)", "B = J_3(b) with b not in {-1, 0}; A = 0", jordan_block(3, 2), {}),
      make("(5c)", "B = J_2(b1) + (b3), no eigenvalue in {-1, 0}; A = 0",
           sum({jordan_block(2, 2), diag({3})}), {}),
      make("(6a)", "B = J_2(-1) + (0); row 1 and column 3 of A free", sum({j2m, diag({0})}),
           row_and_last_column(3)),
      make("(6b)", "B = (-1) + J_2(0); row 1 and column 3 of A free", sum({diag({-1}), j20}),
           row_and_last_column(3)),
      make("(6c)", "B = diag(-1, b2, 0); row 1 and column 3 of A free", diag({-1, 2, 0}),
           row_and_last_column(3)),
      make("(7a)", "B = [[b1, -1, 0], [0, b1, 0], [0, 0, 0]]; column 3 of A free",
           DenseMatrix{{2, -1, 0}, {0, 2, 0}, {0, 0, 0}}, columns(3, {2})),
      make("(7b)", "B = J_3(0); column 3 of A free", jordan_block(3, 0), columns(3, {2})),
  };
}

// B = diag(-I_k, 0_{n-k}); A is block triangular with the off-diagonal block
// allowed by the flavor.
std::vector<CatalogEntry> kx_forms(std::size_t n, Flavor flavor) {
  const bool lower = variant_of(flavor) == KxVariant::I14;
  std::vector<CatalogEntry> out;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Rational> d(n, Rational(0));
    for (std::size_t i = 0; i < k; ++i) d[i] = -1;
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const bool rtop = r < k;
        const bool ctop = c < k;
        if (rtop == ctop || (lower ? !rtop : rtop)) cells.push_back({r, c});
      }
    std::string shape = lower ? "[[A1, 0], [A3, A4]]" : "[[A1, A2], [0, A4]]";
    out.push_back(make("k=" + std::to_string(k),
                       "B = diag(-I_" + std::to_string(k) + ", 0_" + std::to_string(n - k) +
                           "); A = " + shape,
                       DenseMatrix::diagonal(d), std::move(cells), flavor));
  }
  return out;
}

}  // namespace

std::vector<CatalogEntry> catalog(std::size_t n, Flavor flavor) {
  if (n < 1 || n > 3) {
    throw UnsupportedDimension("catalog covers n = 1, 2, 3 (got " + std::to_string(n) + ")");
  }
  if (flavor != Flavor::XKx) return kx_forms(n, flavor);
  switch (n) {
    case 1: return xkx_one();
    case 2: return xkx_two();
    default: return xkx_three();
  }
}

std::vector<CatalogEntry> spot_examples() {
  const DenseMatrix j2m = jordan_block(2, -1);
  const DenseMatrix j20 = jordan_block(2, 0);
  std::vector<CatalogEntry> out;
  out.push_back(make("n=4", "B = J_2(0) + J_2(-1)", sum({j20, j2m}),
                     {{0, 1}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {2, 3}, {3, 1}}));
  auto five = rows(5, {0});
  for (std::size_t r = 1; r < 5; ++r) five.push_back({r, 2});
  out.push_back(make("n=5", "B = J_2(-1) + J_1(0) + J_2(2)",
                     sum({j2m, diag({0}), jordan_block(2, 2)}), std::move(five)));
  std::vector<Cell> six;
  for (std::size_t r = 0; r < 6; ++r) {
    if (r == 4) {
      for (std::size_t c = 0; c < 6; ++c) six.push_back({r, c});
    } else {
      six.push_back({r, 1});
    }
  }
  out.push_back(make("n=6", "B = J_2(0) + J_2(3) + J_2(-1)", sum({j20, jordan_block(2, 3), j2m}),
                     std::move(six)));
  for (std::size_t k : {2, 3}) {
    const std::size_t n = 2 * k;
    std::vector<DenseMatrix> neg(k, j2m), zero(k, j20);
    std::vector<Cell> rcells, ccells;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (r % 2 == 0) rcells.push_back({r, c});
        if (c % 2 == 1) ccells.push_back({r, c});
      }
    out.push_back(make("J_2(-1)^" + std::to_string(k), "B = J_2(-1) repeated " + std::to_string(k) +
                                                           " times; odd rows of A free",
                       direct_sum(neg), std::move(rcells)));
    out.push_back(make("J_2(0)^" + std::to_string(k), "B = J_2(0) repeated " + std::to_string(k) +
                                                          " times; even columns of A free",
                       direct_sum(zero), std::move(ccells)));
  }
  return out;
}

}  // namespace rbmod
