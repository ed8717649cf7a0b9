#include "entrec/decomposition.hpp"

#include <algorithm>

namespace entrec {
namespace {

SchmidtVector slice(const SchmidtVector& v, int begin, int end) {
  std::vector<Rational> coeffs(v.coefficients().begin() + begin,
                               v.coefficients().begin() + end);
  return SchmidtVector(std::move(coeffs));
}

bool pointwise_equal(const SchmidtVector& a, const SchmidtVector& b, int begin, int end) {
  for (int i = begin; i < end; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

}  // namespace

NormalDecomposition normal_decompose(const SchmidtVector& x, const SchmidtVector& y) {
  MajorizationReport report = majorize(x, y);
  if (!report.majorized) {
    fail(ErrorKind::NotMajorized, "normal decomposition needs x majorized by y");
  }

  // Cut at every equality index.  Segments with interior equalities are
  // pointwise equal and come out as singletons here; everything else is a
  // maximal strictly-majorized piece.
  std::vector<int> cuts = report.delta;
  cuts.push_back(x.dim());

  NormalDecomposition nd;
  int begin = 0;
  for (int cut : cuts) {
    if (cut == begin) continue;
    const bool equal = pointwise_equal(x, y, begin, cut);
    if (equal && !nd.blocks.empty() && nd.blocks.back().tag == BlockTag::Equal) {
      // Merge runs of pointwise-equal singletons into one Equal block.
      Block& prev = nd.blocks.back();
      prev.x = direct_sum(prev.x, slice(x, begin, cut));
      prev.y = direct_sum(prev.y, slice(y, begin, cut));
    } else {
      nd.blocks.push_back({slice(x, begin, cut), slice(y, begin, cut),
                           equal ? BlockTag::Equal : BlockTag::Strict});
    }
    begin = cut;
  }

  for (int i = 0; i < nd.block_count(); ++i) {
    if (nd.blocks[i].tag == BlockTag::Equal) {
      nd.I.push_back(i + 1);
    } else {
      nd.D.push_back(i + 1);
    }
  }
  auto grouped = group_indices(nd.I, nd.D);
  nd.I_grouped = std::move(grouped.first);
  nd.D_grouped = std::move(grouped.second);
  return nd;
}

std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> group_indices(
    const std::vector<int>& I, const std::vector<int>& D) {
  std::vector<std::vector<int>> i_grouped;
  i_grouped.reserve(I.size());
  for (int i : I) i_grouped.push_back({i});

  std::vector<std::vector<int>> d_grouped;
  for (int d : D) {
    if (!d_grouped.empty() && d_grouped.back().back() + 1 == d) {
      d_grouped.back().push_back(d);
    } else {
      d_grouped.push_back({d});
    }
  }
  return {i_grouped, d_grouped};
}

std::vector<GroupedElement> natural_order(const NormalDecomposition& nd) {
  std::vector<GroupedElement> order;
  for (const auto& g : nd.I_grouped) order.push_back({true, g});
  for (const auto& g : nd.D_grouped) order.push_back({false, g});
  std::sort(order.begin(), order.end(),
            [](const GroupedElement& a, const GroupedElement& b) {
              return a.members.front() < b.members.front();
            });
  return order;
}

}  // namespace entrec
