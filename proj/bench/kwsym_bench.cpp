// Times the OpenMP kernels against their serial references and checks that
// both produce identical results.
//
//   kwsym_bench [N V] [keywords terms]

#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include <omp.h>

#include "kwsym/configuration.hpp"
#include "kwsym/matcher.hpp"
#include "kwsym/schema.hpp"

namespace {

template <typename F>
double seconds(F&& run) {
  const double start = omp_get_wtime();
  run();
  return omp_get_wtime() - start;
}

std::string random_word(std::mt19937& rng) {
  std::uniform_int_distribution<int> length(3, 12);
  std::uniform_int_distribution<int> letter('a', 'z');
  std::string word(static_cast<std::size_t>(length(rng)), 'a');
  for (char& c : word) c = static_cast<char>(letter(rng));
  return word;
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 2 ? std::atoi(argv[1]) : 6;
  const int v = argc > 2 ? std::atoi(argv[2]) : 11;
  const int keywords = argc > 4 ? std::atoi(argv[3]) : 64;
  const int terms = argc > 4 ? std::atoi(argv[4]) : 4096;
  int failures = 0;

  std::printf("threads: %d\n", omp_get_max_threads());

  kwsym::Census serial, parallel;
  const auto cap = std::uint64_t{1} << 40;
  const double t_serial = seconds([&] { serial = kwsym::class_census_serial(n, v, cap); });
  const double t_parallel = seconds([&] { parallel = kwsym::class_census(n, v, cap); });
  const bool census_ok = serial == parallel;
  failures += !census_ok;
  std::printf("census N=%d V=%d (%s configurations): serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
              n, v, kwsym::count_configurations(n, v).str().c_str(), t_serial, t_parallel,
              t_serial / t_parallel, census_ok ? "match" : "MISMATCH");

  std::mt19937 rng(7);
  kwsym::KeywordQuery query;
  for (int i = 0; i < keywords; ++i) query.keywords.push_back(random_word(rng));
  kwsym::Vocabulary vocabulary;
  for (int j = 0; j < terms; ++j) {
    vocabulary.terms.push_back({j + 1, random_word(rng), kwsym::TermKind::attribute, "t", ""});
  }
  std::vector<double> a, b;
  const double s_serial = seconds([&] {
    const auto m = kwsym::score_matrix_serial(query, vocabulary);
    a.assign(m.weights().begin(), m.weights().end());
  });
  const double s_parallel = seconds([&] {
    const auto m = kwsym::score_matrix(query, vocabulary);
    b.assign(m.weights().begin(), m.weights().end());
  });
  const bool scores_ok = a == b;
  failures += !scores_ok;
  std::printf("score matrix %dx%d: serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n", keywords,
              terms, s_serial, s_parallel, s_serial / s_parallel, scores_ok ? "match" : "MISMATCH");
  return failures == 0 ? 0 : 1;
}
