#include "adkdv/tau_grid.hpp"

#include <exception>

namespace adkdv {

namespace {

// Exceptions may not escape an OpenMP region; keep the first one and
// rethrow after the loop.
class ErrorCollector {
 public:
  template <class Fn>
  void run(Fn&& fn) noexcept {
    try {
      fn();
    } catch (...) {
#pragma omp critical(adkdv_grid_error)
      if (!err_) err_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (err_) std::rethrow_exception(err_);
  }

 private:
  std::exception_ptr err_;
};

}  // namespace

std::vector<double> tau_grid_serial(const TauFunction<double>& tf,
                                    const std::vector<ChamberLabel>& labels) {
  std::vector<double> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) out[i] = tf.eval(labels[i]);
  return out;
}

std::vector<double> tau_grid_parallel(const TauFunction<double>& tf,
                                      const std::vector<ChamberLabel>& labels) {
  std::vector<double> out(labels.size());
  const long long count = static_cast<long long>(labels.size());
  ErrorCollector errs;
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i)
    errs.run([&, i] { out[i] = tf.eval(labels[i]); });
  errs.rethrow();
  return out;
}

std::vector<double> vertex_grid_serial(const TauFunction<double>& tf,
                                       const std::vector<VertexQuery>& queries) {
  std::vector<double> out(queries.size());
  for (std::size_t i = 0; i < queries.size(); ++i)
    out[i] = vertex_weight(tf, queries[i].below, queries[i].upper_class, queries[i].lower_class);
  return out;
}

std::vector<double> vertex_grid_parallel(const TauFunction<double>& tf,
                                         const std::vector<VertexQuery>& queries) {
  std::vector<double> out(queries.size());
  const long long count = static_cast<long long>(queries.size());
  ErrorCollector errs;
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i)
    errs.run([&, i] {
      out[i] =
          vertex_weight(tf, queries[i].below, queries[i].upper_class, queries[i].lower_class);
    });
  errs.rethrow();
  return out;
}

bool parallel_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace adkdv
