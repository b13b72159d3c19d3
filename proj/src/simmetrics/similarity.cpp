#include "paratask/simmetrics/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "paratask/common/error.hpp"

namespace paratask::simmetrics {
namespace {

using Ngram = std::span<const std::string>;

struct NgramLess {
  bool operator()(Ngram x, Ngram y) const {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }
};

std::map<Ngram, std::size_t, NgramLess> count_ngrams(std::span<const std::string> toks,
                                                     std::size_t n) {
  std::map<Ngram, std::size_t, NgramLess> counts;
  for (std::size_t i = 0; i + n <= toks.size(); ++i) ++counts[toks.subspan(i, n)];
  return counts;
}

// Sum over n-grams of min(count in a, count in b).
std::size_t clipped_matches(std::span<const std::string> a, std::span<const std::string> b,
                            std::size_t n) {
  auto ca = count_ngrams(a, n);
  auto cb = count_ngrams(b, n);
  std::size_t m = 0;
  for (const auto& [gram, count] : ca) {
    auto it = cb.find(gram);
    if (it != cb.end()) m += std::min(count, it->second);
  }
  return m;
}

void require_tokens(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptyText, "empty token sequence");
}

std::vector<std::string> forms_of(std::string_view text) {
  return textcore::tokenize(text).forms();
}

}  // namespace

double compression_ratio(std::string_view a, std::string_view b) {
  const auto la = textcore::char_length(a);
  const auto lb = textcore::char_length(b);
  if (la == 0 || lb == 0) throw Error(ErrorCode::EmptyText, "empty text in pair");
  return static_cast<double>(std::min(la, lb)) / static_cast<double>(std::max(la, lb));
}

double compression_ratio(const textcore::ParaphrasePair& pair) {
  return compression_ratio(pair.text_a, pair.text_b);
}

double rouge1_f(std::span<const std::string> a, std::span<const std::string> b) {
  require_tokens(a, b);
  const auto m = clipped_matches(a, b, 1);
  if (m == 0) return 0.0;
  const double p = static_cast<double>(m) / static_cast<double>(a.size());
  const double r = static_cast<double>(m) / static_cast<double>(b.size());
  return 2.0 * p * r / (p + r);
}

double rouge1_f(const textcore::ParaphrasePair& pair) {
  auto a = forms_of(pair.text_a);
  auto b = forms_of(pair.text_b);
  return rouge1_f(a, b);
}

double bleu(std::span<const std::string> candidate, std::span<const std::string> reference) {
  require_tokens(candidate, reference);
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= kBleuMaxOrder; ++n) {
    const auto matches = clipped_matches(candidate, reference, n);
    const std::size_t total = candidate.size() >= n ? candidate.size() - n + 1 : 0;
    double p;
    if (n == 1) {
      if (matches == 0) return 0.0;
      p = static_cast<double>(matches) / static_cast<double>(total);
    } else {
      p = static_cast<double>(matches + 1) / static_cast<double>(total + 1);
    }
    log_sum += std::log(p);
  }
  const double c = static_cast<double>(candidate.size());
  const double r = static_cast<double>(reference.size());
  const double bp = c > r ? 1.0 : std::exp(1.0 - r / c);
  return bp * std::exp(log_sum / kBleuMaxOrder);
}

double bleu_sym(std::span<const std::string> a, std::span<const std::string> b) {
  require_tokens(a, b);
  return (bleu(a, b) + bleu(b, a)) / 2.0;
}

double bleu_sym(const textcore::ParaphrasePair& pair) {
  auto a = forms_of(pair.text_a);
  auto b = forms_of(pair.text_b);
  return bleu_sym(a, b);
}

double cosine_sim(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::DimensionMismatch, "cosine of vectors with dimensions " +
                                                  std::to_string(u.size()) + " and " +
                                                  std::to_string(v.size()));
  }
  double dot = 0, nu = 0, nv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) throw Error(ErrorCode::ZeroVector, "cosine of a zero vector");
  // sqrt(nu * nv) rather than sqrt(nu) * sqrt(nv): a vector against itself
  // then yields exactly 1.
  const double c = dot / std::sqrt(nu * nv);
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace paratask::simmetrics
