#include "qcorr/closedform.hpp"
#include "qcorr/entangle.hpp"
#include "qcorr/liouville.hpp"
#include "qcorr/scenario.hpp"
#include "qcorr/unravel.hpp"

#include <benchmark/benchmark.h>

namespace {

qcorr::EvolutionProblem problem_for(qcorr::NoiseChannel channel) {
  qcorr::EvolutionProblem problem;
  problem.sys.omega = 1.0;
  problem.channel = channel;
  problem.corr.gamma_ab = 0.3;
  problem.corr.gamma_ac = 0.3;
  problem.corr.gamma_bc = -0.2;
  problem.rho0 = qcorr::ghz_state();
  problem.t_max = 1.0;
  problem.dt = 1e-3;
  return problem;
}

void BM_rhs_dephasing(benchmark::State& state) {
  const qcorr::EvolutionProblem problem = problem_for(qcorr::NoiseChannel::Dephasing);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcorr::rhs(problem.rho0, problem));
  }
}
BENCHMARK(BM_rhs_dephasing);

void BM_rhs_amplitude(benchmark::State& state) {
  const qcorr::EvolutionProblem problem = problem_for(qcorr::NoiseChannel::Amplitude);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcorr::rhs(problem.rho0, problem));
  }
}
BENCHMARK(BM_rhs_amplitude);

void BM_integrate_unit_time(benchmark::State& state) {
  const qcorr::EvolutionProblem problem = problem_for(qcorr::NoiseChannel::Amplitude);
  const std::vector<double> samples = {1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcorr::integrate(problem, samples));
  }
}
BENCHMARK(BM_integrate_unit_time);

void BM_closedform_dephasing(benchmark::State& state) {
  const qcorr::EvolutionProblem problem = problem_for(qcorr::NoiseChannel::Dephasing);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qcorr::evolve_dephasing(problem.rho0, problem.sys, problem.corr, 1.0));
  }
}
BENCHMARK(BM_closedform_dephasing);

void BM_full_report(benchmark::State& state) {
  const qcorr::ComplexMatrix rho = qcorr::w_state();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcorr::full_report(rho, 0.0));
  }
}
BENCHMARK(BM_full_report);

void BM_trajectory_unit_time(benchmark::State& state) {
  const qcorr::EvolutionProblem problem = problem_for(qcorr::NoiseChannel::Amplitude);
  const qcorr::NoiseSampler sampler = qcorr::make_sampler(problem.corr);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcorr::propagate_trajectory(problem, sampler, seed++));
  }
}
BENCHMARK(BM_trajectory_unit_time);

void BM_path_pqrs(benchmark::State& state) {
  double s = 0.0;
  for (auto _ : state) {
    s += 1.0 / 1024.0;
    if (s > 1.0) s -= 1.0;
    benchmark::DoNotOptimize(qcorr::path_pqrs(s));
  }
}
BENCHMARK(BM_path_pqrs);

}  // namespace

BENCHMARK_MAIN();
