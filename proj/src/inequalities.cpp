#include "immw/inequalities.hpp"

namespace immw {

namespace {

using AnyFactored = std::variant<FactoredTN, FactoredPD<Rational>, FactoredPD<GaussianRational>>;

struct Instance {
  AnyFactored factored;
  MatrixClass requested;
  bool singular;
};

bool nonsingular_of(const AnyFactored& f) {
  return std::visit([](const auto& fm) {
    if constexpr (std::is_same_v<std::decay_t<decltype(fm)>, FactoredTN>)
      return fm.nonsingular();
    else
      return fm.definite();
  }, f);
}

json certificate_of(const AnyFactored& f) {
  return std::visit([](const auto& fm) { return to_json(fm); }, f);
}

// Criterion sweep sharing one permutation pass per (instance, μ) across all λ.
template <class S>
void criterion_reports(const DenseMatrix<S>& a, const json& cert, MatrixClass cls, int m,
                       std::vector<CheckReport>& out) {
  const int n = static_cast<int>(a.rows());
  const CharacterTable& table = CharacterTable::cached(m);
  for (const WeakComposition& mu : weak_compositions(m, n)) {
    const MultisetIndex idx = MultisetIndex::from_weight(mu);
    const DenseMatrix<S> sub = generalized_submatrix(a, idx);
    const auto sums = class_diagonal_sums(sub, table);
    for (std::size_t l = 0; l < table.partitions().size(); ++l) {
      const Partition& shape = table.partitions()[l];
      S imm(0);
      for (std::size_t r = 0; r < sums.size(); ++r) {
        const long long chi = table.value(static_cast<int>(l), static_cast<int>(r));
        if (chi != 0) imm += ScalarTraits<S>::from_rational(Rational(chi)) * sums[r];
      }
      const Rational value = detail::exact_real(imm, "criterion immanant");
      const bool predicted = positivity_prediction(shape, mu);

      CheckReport report;
      report.check = "criterion";
      report.matrix_class = cls;
      report.certificate = cert;
      report.lambda = shape;
      report.mu = mu;
      report.lhs = value.to_string();
      report.rhs = predicted ? "> 0" : "0";
      report.margin = value.to_string();
      report.verdict = (predicted ? value > Rational(0) : value.is_zero()) ? "pass" : "fail";
      out.push_back(std::move(report));
    }
  }
}

std::vector<CheckReport> run_instance(const Instance& inst, const ScanConfig& config) {
  std::vector<CheckReport> out;
  const json cert = certificate_of(inst.factored);

  for (const std::string& check : config.checks) {
    if (check == "criterion") {
      if (!nonsingular_of(inst.factored)) {
        CheckReport skip;
        skip.check = "criterion";
        skip.matrix_class = inst.requested;
        skip.certificate = cert;
        skip.verdict = "skip";
        skip.note = "singular instance outside the nonvanishing criterion's hypotheses";
        out.push_back(std::move(skip));
        continue;
      }
      for (int m : config.ms) {
        std::visit([&](const auto& fm) {
          const MatrixClass cls =
              std::is_same_v<std::decay_t<decltype(fm)>, FactoredTN> ? MatrixClass::tn
                                                                     : MatrixClass::pd;
          criterion_reports(fm.matrix(), cert, cls, m, out);
        }, inst.factored);
      }
    } else if (check == "schur") {
      std::visit([&](const auto& fm) {
        for (const Partition& shape : enumerate_partitions(fm.n())) {
          const Rational margin = schur_inequality_margin(fm, shape);
          CheckReport report;
          report.check = "schur";
          report.matrix_class = inst.requested;
          report.certificate = cert;
          report.lambda = shape;
          report.lhs = margin.to_string();
          report.rhs = "0";
          report.margin = margin.to_string();
          report.verdict = margin >= Rational(0) ? "pass" : "fail";
          out.push_back(std::move(report));
        }
      }, inst.factored);
    } else if (check == "orbit") {
      for (int m : config.ms) {
        std::visit([&](const auto& fm) {
          for (const Partition& shape : enumerate_partitions(m))
            for (const WeakComposition& mu : weak_compositions(m, fm.n()))
              out.push_back(orbit_inequality_check(fm, shape, mu));
        }, inst.factored);
      }
    } else {
      throw DomainError("scan: unknown check \"" + check + "\"");
    }
  }
  return out;
}

}  // namespace

std::vector<CheckReport> scan(const ScanConfig& config) {
  for (int m : config.ms) {
    if (m > 8) throw ResourceLimitError("scan: m > 8 refused");
    for (int n : config.ns) {
      double size = 1;
      for (int k = 0; k < m; ++k) size *= n;
      if (size > 1e5) throw ResourceLimitError("scan: n^m > 1e5 refused");
    }
  }

  // Instances are generated deterministically, then checked in parallel and
  // merged in generation order.
  std::vector<Instance> instances;
  std::uint64_t salt = 0;
  for (MatrixClass cls : config.classes) {
    for (int n : config.ns) {
      for (int k = 0; k < config.count; ++k) {
        const std::uint64_t seed = config.seed * 1000003ULL + salt++;
        const bool singular = cls == MatrixClass::psd && k % 2 == 1;
        switch (cls) {
          case MatrixClass::tn:
            instances.push_back(
                {FactoredTN::random(n, seed, 2 * n, 0), cls, false});
            break;
          case MatrixClass::pd:
          case MatrixClass::psd: {
            const int zeros = singular ? 1 : 0;
            if (k % 2 == 0)
              instances.push_back({FactoredPD<Rational>::random(n, seed, zeros), cls, singular});
            else
              instances.push_back(
                  {FactoredPD<GaussianRational>::random(n, seed, zeros), cls, singular});
            break;
          }
        }
      }
    }
  }

  std::vector<std::vector<CheckReport>> partial(instances.size());
  long long threads = config.threads > 0 ? config.threads
                                         : static_cast<long long>(std::thread::hardware_concurrency());
  threads = std::max<long long>(1, std::min<long long>(threads, instances.size()));

  std::atomic<std::size_t> cursor{0};
  auto drain = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= instances.size()) break;
      partial[i] = run_instance(instances[i], config);
    }
  };
  if (threads <= 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    for (long long t = 0; t < threads; ++t) pool.emplace_back(drain);
    for (auto& th : pool) th.join();
  }

  std::vector<CheckReport> out;
  for (auto& chunk : partial)
    for (auto& report : chunk) out.push_back(std::move(report));
  return out;
}

}  // namespace immw
