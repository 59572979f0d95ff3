#ifndef ISGA_KERNELS_HPP_
#define ISGA_KERNELS_HPP_

// Data-parallel table kernels. Every kernel has a serial reference version
// kept for testing and benchmarking; the parallel version must produce
// bit-identical output.

#include <array>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <vector>

#ifdef ISGA_HAVE_OPENMP
#include <omp.h>
#endif

namespace isga::kernels {

  using id_type = std::uint32_t;
  using triple  = std::array<id_type, 3>;

  // First (a,b,c) in lexicographic order with (ab)c != a(bc); `table` is
  // row-major n x n.
  inline std::optional<triple>
  first_nonassociative_serial(std::vector<id_type> const& table,
                              std::size_t                 n) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t ab = table[a * n + b];
        for (std::size_t c = 0; c < n; ++c) {
          if (table[ab * n + c] != table[a * n + table[b * n + c]]) {
            return triple{static_cast<id_type>(a),
                          static_cast<id_type>(b),
                          static_cast<id_type>(c)};
          }
        }
      }
    }
    return std::nullopt;
  }

  inline std::optional<triple>
  first_nonassociative_parallel(std::vector<id_type> const& table,
                                std::size_t                 n) {
    // Each row a records its own first failure; the smallest failing row
    // wins, so the answer matches the serial scan.
    std::vector<std::int64_t> first_bc(n, -1);
    auto const                rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t a = 0; a < rows; ++a) {
      for (std::size_t b = 0; b < n && first_bc[a] < 0; ++b) {
        std::size_t ab = table[a * n + b];
        for (std::size_t c = 0; c < n; ++c) {
          if (table[ab * n + c] != table[a * n + table[b * n + c]]) {
            first_bc[a] = static_cast<std::int64_t>(b * n + c);
            break;
          }
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (first_bc[a] >= 0) {
        auto bc = static_cast<std::size_t>(first_bc[a]);
        return triple{static_cast<id_type>(a),
                      static_cast<id_type>(bc / n),
                      static_cast<id_type>(bc % n)};
      }
    }
    return std::nullopt;
  }

  // Row-major n x n table with entry (a,b) = f(a,b).
  template <typename F>
  std::vector<id_type> tabulate_serial(std::size_t n, F&& f) {
    std::vector<id_type> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = f(a, b);
      }
    }
    return table;
  }

  // `f` must be safe to call concurrently. An exception from `f` is rethrown
  // after the loop (the one from the lowest row).
  template <typename F>
  std::vector<id_type> tabulate_parallel(std::size_t n, F&& f) {
    std::vector<id_type>            table(n * n);
    std::vector<std::exception_ptr> errors(n);
    auto const                      rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t a = 0; a < rows; ++a) {
      try {
        for (std::size_t b = 0; b < n; ++b) {
          table[a * n + b] = f(static_cast<std::size_t>(a), b);
        }
      } catch (...) {
        errors[a] = std::current_exception();
      }
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    return table;
  }

  // out[i] = f(in[i]).
  template <typename In, typename F>
  auto map_serial(std::vector<In> const& in, F&& f) {
    std::vector<decltype(f(in.front()))> out;
    out.reserve(in.size());
    for (auto const& x : in) {
      out.push_back(f(x));
    }
    return out;
  }

  template <typename In, typename F>
  auto map_parallel(std::vector<In> const& in, F&& f) {
    using Out = decltype(f(in.front()));
    std::vector<std::optional<Out>> slots(in.size());
    std::vector<std::exception_ptr> errors(in.size());
    auto const count = static_cast<std::int64_t>(in.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        slots[i].emplace(f(in[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    std::vector<Out> out;
    out.reserve(in.size());
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (errors[i]) {
        std::rethrow_exception(errors[i]);
      }
      out.push_back(std::move(*slots[i]));
    }
    return out;
  }

  inline int max_threads() {
#ifdef ISGA_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
  }

}  // namespace isga::kernels

#endif  // ISGA_KERNELS_HPP_
