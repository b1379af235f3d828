#include "guess/based.hpp"

#include <algorithm>

#include "guess/error.hpp"
#include "guess/lasso.hpp"

namespace guess {

namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

const Alphabet bits{2};

void check_point(Alphabet alphabet, const UPWord& w) {
  alphabet.check(w.prefix());
  alphabet.check(w.period());
}

Word membership_bits(const std::vector<ParitySet>& sets, const UPWord& w) {
  Word out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(membership_up(s, w) ? 1 : 0);
  return out;
}

}  // namespace

Alphabet family_alphabet(const OracleFamily& family) {
  return std::visit(Overload{
                        [](const ExplicitFamily& f) {
                          if (f.cycle.empty()) {
                            throw Error(ErrorKind::invalid_argument, "explicit family needs a nonempty cycle");
                          }
                          const Alphabet a = f.cycle.front().alphabet();
                          for (const auto& s : f.prefix) require_same_alphabet(a, s.alphabet(), "family member");
                          for (const auto& s : f.cycle) require_same_alphabet(a, s.alphabet(), "family member");
                          return a;
                        },
                        [](const CylinderFamily& f) { return f.alphabet; },
                    },
                    family);
}

UPWord family_point(const OracleFamily& family, const UPWord& w) {
  const Alphabet alphabet = family_alphabet(family);
  check_point(alphabet, w);
  return std::visit(Overload{
                        [&](const ExplicitFamily& f) {
                          return UPWord(membership_bits(f.prefix, w), membership_bits(f.cycle, w));
                        },
                        [&](const CylinderFamily& f) {
                          const std::uint32_t k = f.alphabet.size();
                          auto block = [k](Symbol a) {
                            Word out(k, 0);
                            out[a] = 1;
                            return out;
                          };
                          Word u, v;
                          for (Symbol a : w.prefix()) {
                            const Word b = block(a);
                            u.insert(u.end(), b.begin(), b.end());
                          }
                          for (Symbol a : w.period()) {
                            const Word b = block(a);
                            v.insert(v.end(), b.begin(), b.end());
                          }
                          return UPWord(std::move(u), std::move(v));
                        },
                    },
                    family);
}

Stream family_stream(const OracleFamily& family, const UPWord& w, std::size_t n) {
  const UPWord point = family_point(family, w);
  Stream out{{}, point.prefix().size(), point.period().size()};
  out.bits.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.bits.push_back(point.at(i) != 0);
  return out;
}

MooreGuesser last_bit_guesser() { return MooreGuesser(bits, 0, {0, 1, 0, 1}, {0, 1}); }

bool verify_based(const MooreGuesser& bit_guesser, const OracleFamily& family, const ParitySet& s,
                  const UPWord& w) {
  require_same_alphabet(bits, bit_guesser.alphabet(), "based guesser reads bits");
  require_same_alphabet(family_alphabet(family), s.alphabet(), "family and set");
  const Limit guess = limit_on_up(bit_guesser, family_point(family, w));
  if (guess == Limit::diverges) return false;
  return (guess == Limit::one) == membership_up(s, w);
}

bool limsup_liminf_check(const OracleFamily& family, const ParitySet& s, const UPWord& w) {
  if (std::holds_alternative<CylinderFamily>(family)) {
    throw Error(ErrorKind::not_eventually_periodic, "limsup/liminf check needs an explicit family");
  }
  require_same_alphabet(family_alphabet(family), s.alphabet(), "family and set");
  const Word cycle = family_point(family, w).period();
  const bool liminf = std::all_of(cycle.begin(), cycle.end(), [](Symbol b) { return b == 1; });
  const bool limsup = std::any_of(cycle.begin(), cycle.end(), [](Symbol b) { return b == 1; });
  const bool member = membership_up(s, w);
  return member == liminf && member == limsup;
}

MooreGuesser cylinder_simulator(const MooreGuesser& g) {
  const std::uint32_t k = g.alphabet().size();
  const std::uint32_t none = k;
  // State (p, position within the block, decoded symbol or none).
  auto id = [&](State p, std::uint32_t pos, std::uint32_t decoded) {
    return static_cast<State>((p * k + pos) * (k + 1) + decoded);
  };
  const std::size_t n = g.size() * k * (k + 1);
  std::vector<State> trans(n * 2);
  std::vector<std::uint8_t> out(n);
  for (State p = 0; p < g.size(); ++p) {
    for (std::uint32_t pos = 0; pos < k; ++pos) {
      for (std::uint32_t decoded = 0; decoded <= k; ++decoded) {
        const State self = id(p, pos, decoded);
        out[self] = g.outputs()[p];
        for (Symbol b = 0; b < 2; ++b) {
          std::uint32_t d = decoded;
          if (b == 1 && d == none) d = pos;
          State target;
          if (pos + 1 < k) {
            target = id(p, pos + 1, d);
          } else {
            target = id(d == none ? p : g.next(p, d), 0, none);
          }
          trans[self * 2 + b] = target;
        }
      }
    }
  }
  return prune_unreachable(MooreGuesser(bits, id(g.start(), 0, none), std::move(trans), std::move(out)));
}

}  // namespace guess
