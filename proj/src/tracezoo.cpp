// Copyright 2026 The tracelab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tracelab/tracezoo.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "tracelab/error.hpp"
#include "tracelab/kloosterman.hpp"

namespace tracelab {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TraceSpec parse_all() {
    auto s = parse();
    if (pos_ != text_.size()) fail("trailing characters");
    return s;
  }

 private:
  TraceSpec parse() {
    if (consume("prod(")) {
      auto left = parse();
      expect(',');
      auto right = parse();
      expect(')');
      return {spec::Product{share(std::move(left)), share(std::move(right))}};
    }
    if (consume("scale(")) {
      const auto lambda = integer();
      expect(',');
      auto inner = parse();
      expect(')');
      return {spec::PullbackScale{lambda, share(std::move(inner))}};
    }
    if (consume("inv(")) {
      const auto beta = integer();
      expect(',');
      auto inner = parse();
      expect(')');
      return {spec::PullbackInvScale{beta, share(std::move(inner))}};
    }
    if (consume("kl")) return {spec::Kloosterman{static_cast<int>(integer())}};
    if (consume("psi:")) return {spec::AdditiveChar{integer()}};
    if (consume("chi:")) return {spec::MultChar{integer()}};
    if (consume("ap:")) return {spec::IndicatorAp{integer()}};
    if (consume("sym:")) {
      const auto k = integer();
      expect(',');
      return {spec::SymPower{static_cast<int>(k), integer()}};
    }
    fail("unknown trace function");
  }

  static SpecPtr share(TraceSpec s) { return std::make_shared<const TraceSpec>(std::move(s)); }

  bool consume(std::string_view token) {
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t integer() {
    std::int64_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::bad_param, "cannot parse trace spec \"" + std::string(text_) +
                                     "\" at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_nonzero(const PrimeField& f, std::int64_t v, const char* what) {
  if (f.reduce(v) == 0) throw Error(Errc::bad_param, std::string(what) + " must be nonzero mod p");
}

// sin((k+1) theta) / sin(theta) with 2 cos(theta) = t, via the Chebyshev
// recurrence U_{n+1} = t U_n - U_{n-1}; continuous through theta = 0, pi.
double chebyshev_u(int k, double t) {
  double prev = 1.0, cur = t;
  if (k == 0) return 1.0;
  for (int n = 1; n < k; ++n) {
    const double next = t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

TraceSpec parse_spec(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const TraceSpec& s) {
  return std::visit(
      overloaded{
          [](const spec::AdditiveChar& n) { return "psi:" + std::to_string(n.a); },
          [](const spec::MultChar& n) { return "chi:" + std::to_string(n.k); },
          [](const spec::Kloosterman& n) { return "kl" + std::to_string(n.k); },
          [](const spec::IndicatorAp& n) { return "ap:" + std::to_string(n.a); },
          [](const spec::PullbackScale& n) {
            return "scale(" + std::to_string(n.lambda) + "," + to_string(*n.inner) + ")";
          },
          [](const spec::PullbackInvScale& n) {
            return "inv(" + std::to_string(n.beta) + "," + to_string(*n.inner) + ")";
          },
          [](const spec::Product& n) {
            return "prod(" + to_string(*n.left) + "," + to_string(*n.right) + ")";
          },
          [](const spec::SymPower& n) {
            return "sym:" + std::to_string(n.k) + "," + std::to_string(n.lambda);
          },
      },
      s.node);
}

TraceFn realize(const TraceSpec& s, const FieldPtr& field) {
  const auto& f = *field;
  const std::int64_t p = f.p();
  const auto n = static_cast<std::size_t>(p);
  const std::string label = to_string(s);
  std::vector<cplx> v(n, 0.0);

  std::visit(
      overloaded{
          [&](const spec::AdditiveChar& node) {
            for (std::int64_t x = 0; x < p; ++x) v[static_cast<std::size_t>(x)] = f.e(f.mul(node.a, x));
          },
          [&](const spec::MultChar& node) {
            if (node.k < 0 || node.k > p - 2) {
              throw Error(Errc::bad_param, "character exponent must lie in 0..p-2");
            }
            for (std::int64_t x = 1; x < p; ++x) {
              v[static_cast<std::size_t>(x)] = f.e_order(node.k * f.dlog(x));
            }
          },
          [&](const spec::Kloosterman& node) { v = kl_all(node.k, field).values; },
          [&](const spec::IndicatorAp& node) { v[static_cast<std::size_t>(f.reduce(node.a))] = 1.0; },
          [&](const spec::PullbackScale& node) {
            require_nonzero(f, node.lambda, "scale factor");
            const auto inner = realize(*node.inner, field);
            for (std::int64_t x = 0; x < p; ++x) {
              v[static_cast<std::size_t>(x)] = inner(f.mul(node.lambda, x));
            }
          },
          [&](const spec::PullbackInvScale& node) {
            require_nonzero(f, node.beta, "inversion scalar");
            const auto inner = realize(*node.inner, field);
            for (std::int64_t x = 1; x < p; ++x) {
              v[static_cast<std::size_t>(x)] = inner(f.mul(node.beta, f.inv(x)));
            }
          },
          [&](const spec::Product& node) {
            const auto a = realize(*node.left, field);
            const auto b = realize(*node.right, field);
            for (std::size_t x = 0; x < n; ++x) v[x] = a.values()[x] * b.values()[x];
          },
          [&](const spec::SymPower& node) {
            if (node.k < 0) throw Error(Errc::bad_param, "symmetric power must be >= 0");
            require_nonzero(f, node.lambda, "sym lambda");
            const auto kl2 = kl_all(2, field);
            for (std::int64_t x = 1; x < p; ++x) {
              const double t = kl2.values[static_cast<std::size_t>(f.mul(node.lambda, x))].real();
              // Deligne: |Kl_2| <= 2, so theta is real.
              if (std::abs(t) > 2.0 + 1e-9) {
                throw Error(Errc::bad_param, "Kl_2 value outside [-2, 2]");
              }
              v[static_cast<std::size_t>(x)] = chebyshev_u(node.k, t);
            }
          },
      },
      s.node);
  return TraceFn(field, std::move(v), label);
}

TorusResult torus_detect(const TraceFn& k, double tol) {
  const auto& f = k.field();
  const std::int64_t p = f.p();
  if (tol <= 0.0) tol = 1e-6 * k.sup_norm();
  std::int64_t anchor = 0;
  for (std::int64_t x = 1; x < p; ++x) {
    if (std::abs(k(x)) > tol) {
      anchor = x;
      break;
    }
  }
  TorusResult result;
  if (anchor == 0) {
    throw Error(Errc::bad_param, "torus_detect needs K not identically 0 on F_p^x");
  }
  for (std::int64_t lambda = 1; lambda < p; ++lambda) {
    const cplx c = k(f.mul(lambda, anchor)) / k(anchor);
    if (std::abs(std::abs(c) - 1.0) * std::abs(k(anchor)) > tol) continue;
    double dev = 0.0;
    for (std::int64_t x = 1; x < p && dev <= tol; ++x) {
      dev = std::max(dev, std::abs(k(f.mul(lambda, x)) - c * k(x)));
    }
    if (dev <= tol) result.members.push_back(lambda);
  }
  // Subgroups of the cyclic group F_p^x are exactly {x : dlog(x) = 0 mod (p-1)/d}
  // for d | p-1, so closure reduces to a size and index check.
  const auto size = static_cast<std::int64_t>(result.members.size());
  bool closed = size > 0 && f.order() % size == 0;
  for (const auto a : result.members) {
    if (!closed) break;
    closed = f.dlog(a) % (f.order() / size) == 0;
  }
  result.is_subgroup = closed;
  return result;
}

}  // namespace tracelab
