#include "albert/lie_rank.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <sstream>

#include "albert/error.hpp"
#include "albert/jordan.hpp"

namespace albert {

namespace {

constexpr std::size_t kDim = TangentOperator::kDim;

std::array<double, kDim * kDim> central_difference(const GeneratorFamily& f, double h) {
  const MatrixTransform plus = build_transform(f, h);
  const MatrixTransform minus = build_transform(f, -h);
  std::array<double, kDim * kDim> d{};
  for (std::size_t col = 0; col < kDim; ++col) {
    Hermitian3::Vector e{};
    e[col] = 1.0;
    const Hermitian3 x = Hermitian3::from_vector(e);
    const auto vp = apply(plus, x).to_vector();
    const auto vm = apply(minus, x).to_vector();
    for (std::size_t row = 0; row < kDim; ++row) {
      d[row * kDim + col] = (vp[row] - vm[row]) / (2.0 * h);
    }
  }
  return d;
}

bool is_boost(const GeneratorFamily& f) { return f.kind == FamilyKind::boost; }

template <class Pred>
std::vector<GeneratorFamily> select(const std::vector<GeneratorFamily>& all, Pred pred) {
  std::vector<GeneratorFamily> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), pred);
  return out;
}

DimensionCheck check(std::string name, const std::vector<GeneratorFamily>& families,
                     std::size_t expected) {
  const auto ts = tangents(families);
  return {span_rank(std::move(name), ts), expected};
}

}  // namespace

Hermitian3 TangentOperator::apply(const Hermitian3& x) const {
  const auto v = x.to_vector();
  Hermitian3::Vector out{};
  for (std::size_t row = 0; row < kDim; ++row) {
    double s = 0.0;
    for (std::size_t col = 0; col < kDim; ++col) s += at(row, col) * v[col];
    out[row] = s;
  }
  return Hermitian3::from_vector(out);
}

TangentOperator tangent(const GeneratorFamily& f, double step) {
  TangentOperator t;
  t.family_id = f.id;
  t.matrix = central_difference(f, step);
  const auto half = central_difference(f, 0.5 * step);
  double worst = 0.0;
  for (std::size_t n = 0; n < t.matrix.size(); ++n) {
    worst = std::max(worst, std::abs(t.matrix[n] - half[n]));
  }
  if (worst > kStepConsistency) {
    std::ostringstream msg;
    msg << "tangent of '" << f.id << "' is step dependent (h vs h/2 differ by " << worst
        << ")";
    throw Error(Errc::step_inconsistency, msg.str());
  }
  return t;
}

double det_derivative(const TangentOperator& t, const Hermitian3& x) {
  return trace_form(freudenthal_product(x, x), t.apply(x));
}

double trace_drift(const TangentOperator& t) {
  double worst = 0.0;
  for (std::size_t col = 0; col < kDim; ++col) {
    worst = std::max(worst, std::abs(t.at(0, col) + t.at(1, col) + t.at(2, col)));
  }
  return worst;
}

SpanReport span_rank(std::string name, std::span<const TangentOperator> tangents) {
  if (tangents.empty()) throw Error(Errc::empty_span, "span_rank needs at least one tangent");

  Eigen::MatrixXd stacked(static_cast<Eigen::Index>(tangents.size()),
                          static_cast<Eigen::Index>(kDim * kDim));
  SpanReport report;
  report.name = std::move(name);
  for (std::size_t r = 0; r < tangents.size(); ++r) {
    report.family_ids.push_back(tangents[r].family_id);
    for (std::size_t c = 0; c < kDim * kDim; ++c) {
      stacked(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          tangents[r].matrix[c];
    }
  }

  const Eigen::BDCSVD<Eigen::MatrixXd> svd(stacked);
  const Eigen::VectorXd& sv = svd.singularValues();
  report.singular_values.assign(sv.data(), sv.data() + sv.size());

  const double largest = report.singular_values.empty() ? 0.0 : report.singular_values[0];
  const double cutoff = kRankThreshold * largest;
  report.rank = static_cast<std::size_t>(
      std::count_if(report.singular_values.begin(), report.singular_values.end(),
                    [&](double s) { return s > cutoff; }));
  report.full_rank = report.rank == report.singular_values.size();

  if (report.rank == 0) {
    report.gap = 0.0;
  } else {
    const double accepted = report.singular_values[report.rank - 1];
    const double rejected = report.full_rank ? cutoff : report.singular_values[report.rank];
    report.gap = rejected > 0.0 ? accepted / rejected : std::numeric_limits<double>::infinity();
  }
  return report;
}

std::vector<TangentOperator> tangents(std::span<const GeneratorFamily> families) {
  std::vector<TangentOperator> out;
  out.reserve(families.size());
  for (const auto& f : families) out.push_back(tangent(f));
  return out;
}

std::vector<DimensionCheck> subgroup_dimensions() {
  const auto& all = catalog();
  const auto ts = tangents(all);

  auto subset = [&](std::string name, auto pred, std::size_t expected) {
    std::vector<TangentOperator> chosen;
    for (std::size_t n = 0; n < all.size(); ++n) {
      if (pred(all[n])) chosen.push_back(ts[n]);
    }
    return DimensionCheck{span_rank(std::move(name), chosen), expected};
  };

  std::vector<DimensionCheck> out;
  out.push_back(subset("E6", [](const auto&) { return true; }, 78));
  out.push_back(subset("F4", [](const auto& f) { return !is_boost(f); }, 52));
  out.push_back(subset("boosts", [](const auto& f) { return is_boost(f); }, 26));
  out.push_back(subset("G2", [](const auto& f) { return f.is_g2(); }, 14));
  out.push_back(subset(
      "SU3",
      [](const auto& f) {
        return f.kind == FamilyKind::g2_class1 || f.kind == FamilyKind::g2_class3;
      },
      8));
  out.push_back(subset(
      "SO8",
      [](const auto& f) {
        return f.is_g2() || f.kind == FamilyKind::phase ||
               (f.kind == FamilyKind::rotation && f.motion == Motion::xy);
      },
      28));
  out.push_back(subset(
      "SO7", [](const auto& f) { return f.is_g2() || f.kind == FamilyKind::phase; }, 21));
  return out;
}

DimensionCheck triality_check() {
  std::vector<GeneratorFamily> all;
  for (BlockType b : {BlockType::I, BlockType::II, BlockType::III}) {
    auto so8 = so8_families(b);
    all.insert(all.end(), so8.begin(), so8.end());
  }
  return check("SO8_triality_union", all, 28);
}

DimensionCheck naive_span_check() { return check("naive_135", naive_families(), 78); }

std::vector<DimensionCheck> flip_span_checks() {
  const auto flips = flip_families();
  std::vector<GeneratorFamily> joined = select(catalog(), [](const GeneratorFamily& f) {
    return f.is_g2() || f.kind == FamilyKind::phase;
  });
  joined.insert(joined.end(), flips.begin(), flips.end());
  return {check("SO7_nested_flips", flips, 21), check("SO7_flips_with_catalog", joined, 21)};
}

}  // namespace albert
