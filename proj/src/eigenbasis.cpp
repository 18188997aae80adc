#include "tubefsi/eigenbasis.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <tuple>

namespace tubefsi {

Eigenpair::Eigenpair(int index, double lambda, ModeDescriptor descriptor)
    : index_(index), lambda_(lambda), descriptor_(std::move(descriptor)) {
  if (index_ < 1) throw ValidationError("eigenpair index must be >= 1");
  if (!(lambda_ > 0.0) || !std::isfinite(lambda_)) {
    throw ValidationError("eigenvalue must be a positive finite number");
  }
  if (const auto* mode = std::get_if<RectangleMode>(&descriptor_)) {
    if (mode->m < 1 || mode->n < 1) throw ValidationError("rectangle mode numbers must be >= 1");
    if (lambda_ != double(mode->m) * mode->m + double(mode->n) * mode->n) {
      throw ValidationError("rectangle mode eigenvalue must equal m^2 + n^2");
    }
  }
}

Eigenpair Eigenpair::rectangle(int index, int m, int n) {
  return Eigenpair(index, double(m) * m + double(n) * n, RectangleMode{m, n});
}

EigenSequence::EigenSequence(std::vector<Eigenpair> pairs) : pairs_(std::move(pairs)) {
  for (std::size_t i = 1; i < pairs_.size(); ++i) {
    if (pairs_[i].lambda() < pairs_[i - 1].lambda()) {
      throw ValidationError("eigen sequence must be nondecreasing in lambda (position " +
                            std::to_string(i + 1) + ")");
    }
  }
}

EigenSequence rectangle_eigensequence(int count) {
  if (count < 1) throw ValidationError("mode count must be >= 1");

  // Lattice points with m^2 + n^2 <= bound number roughly pi*bound/4.
  long bound = 2;
  std::vector<std::tuple<long, int, int>> modes;
  for (;;) {
    modes.clear();
    for (int m = 1; long(m) * m + 1 <= bound; ++m) {
      for (int n = 1; long(m) * m + long(n) * n <= bound; ++n) {
        modes.emplace_back(long(m) * m + long(n) * n, m, n);
      }
    }
    if (modes.size() >= std::size_t(count)) break;
    bound *= 2;
  }
  std::sort(modes.begin(), modes.end());

  std::vector<Eigenpair> pairs;
  pairs.reserve(std::size_t(count));
  for (int k = 0; k < count; ++k) {
    const auto [lambda, m, n] = modes[std::size_t(k)];
    pairs.push_back(Eigenpair::rectangle(k + 1, m, n));
  }
  return EigenSequence(std::move(pairs));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

EigenSequence load_external_eigenvalues(std::istream& source) {
  std::vector<std::pair<double, int>> values;
  std::string line;
  int row = 0;
  while (std::getline(source, line)) {
    ++row;
    std::string_view text(line);
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;

    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ValidationError("eigenvalue table row " + std::to_string(row) + ": '" +
                            std::string(text) + "' is not a number");
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw ValidationError("eigenvalue table row " + std::to_string(row) + ": '" +
                            std::string(text) + "' is not a positive eigenvalue");
    }
    values.emplace_back(value, row);
  }
  std::stable_sort(values.begin(), values.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Eigenpair> pairs;
  pairs.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    pairs.emplace_back(int(k) + 1, values[k].first,
                       ExternalMode{"row " + std::to_string(values[k].second)});
  }
  return EigenSequence(std::move(pairs));
}

EigenSequence load_external_eigenvalues(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open eigenvalue table " + path.string());
  return load_external_eigenvalues(in);
}

}  // namespace tubefsi
