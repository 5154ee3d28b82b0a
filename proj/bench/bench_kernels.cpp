// Throughput of the parallel kernels against the serial reference loops on
// the GEMM shapes one training step issues.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "frcr/kernels.hpp"

namespace {

frcr::Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  frcr::Matrix m(r, c);
  for (double& v : m.values()) v = u(rng);
  return m;
}

template <class F>
double seconds_per_call(F&& f, double budget = 0.5) {
  f();
  int calls = 0;
  const auto start = std::chrono::steady_clock::now();
  double elapsed = 0.0;
  do {
    f();
    ++calls;
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  } while (elapsed < budget);
  return elapsed / calls;
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::stoi(argv[1]) : frcr::kernels::threads();
  frcr::kernels::set_threads(threads);
  std::mt19937_64 rng(42);

  // (batch, in, out): first layer MNIST, second layer MNIST, first layer CIFAR.
  const std::vector<std::tuple<int, int, int>> shapes{{64, 784, 256}, {64, 256, 256}, {64, 3072, 2000}};
  std::printf("threads=%d\n", threads);
  std::printf("%-10s %-16s %12s %12s %9s\n", "kernel", "shape", "reference", "parallel", "speedup");
  for (const auto& [b, k, n] : shapes) {
    const frcr::Matrix x = random_matrix(b, k, rng);
    const frcr::Matrix w = random_matrix(n, k, rng);
    const frcr::Matrix g = random_matrix(b, n, rng);
    frcr::Matrix c;
    const double flops = 2.0 * b * k * n;
    const std::string shape = std::to_string(b) + "x" + std::to_string(k) + "x" + std::to_string(n);

    auto row = [&](const char* name, double ref, double par) {
      std::printf("%-10s %-16s %9.2f GF %9.2f GF %8.1fx\n", name, shape.c_str(), flops / ref * 1e-9,
                  flops / par * 1e-9, ref / par);
    };
    row("abt", seconds_per_call([&] { frcr::kernels::reference::matmul_abt(x, w, c); }),
        seconds_per_call([&] { frcr::kernels::matmul_abt(x, w, c); }));
    row("ab", seconds_per_call([&] { frcr::kernels::reference::matmul_ab(g, w, c); }),
        seconds_per_call([&] { frcr::kernels::matmul_ab(g, w, c); }));
    row("atb", seconds_per_call([&] { frcr::kernels::reference::matmul_atb(g, x, c); }),
        seconds_per_call([&] { frcr::kernels::matmul_atb(g, x, c); }));
  }
  return 0;
}
