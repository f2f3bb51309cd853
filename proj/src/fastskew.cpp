#include "nacx/fastskew.hpp"

namespace nacx::fastskew {

Ctx make_ctx(const Ring& D, const RingAut& sigma, size_t max_power) {
  const DenseRingTables* t = D.tables();
  if (!t) throw BudgetError(D.describe() + ": no index tables available for fast sweeps");
  Ctx c;
  c.D = t;
  PermMap id;
  id.img.resize(t->size);
  for (uint32_t i = 0; i < t->size; ++i) id.img[i] = i;
  c.sigpow.push_back(std::move(id));
  PermMap s = PermMap::from_matrix(D, sigma.matrix());
  for (size_t j = 1; j <= max_power; ++j) {
    PermMap next;
    next.img.resize(t->size);
    for (uint32_t i = 0; i < t->size; ++i) next.img[i] = s.img[c.sigpow[j - 1].img[i]];
    c.sigpow.push_back(std::move(next));
  }
  return c;
}

IPoly mul(const Ctx& c, const IPoly& g, const IPoly& h) {
  if (g.empty() || h.empty()) return {};
  IPoly out(g.size() + h.size() - 1, 0);
  for (size_t i = 0; i < g.size(); ++i) {
    if (!g[i]) continue;
    const PermMap& s = c.sigpow[i];
    for (size_t j = 0; j < h.size(); ++j) {
      if (!h[j]) continue;
      out[i + j] = c.add(out[i + j], c.mul(g[i], s.img[h[j]]));
    }
  }
  strip(out);
  return out;
}

bool right_divmod(const Ctx& c, IPoly g, const IPoly& f, IPoly* q, IPoly* r) {
  strip(g);
  size_t df = f.size() - 1;
  IPoly quot(g.size() > df ? g.size() - df : 0, 0);
  while (g.size() > df) {
    size_t n = g.size() - 1;
    uint32_t lead = g.back();
    if (!lead) {
      g.pop_back();
      strip(g);
      continue;
    }
    uint32_t twisted = c.sigpow[n - df].img[f[df]];
    int64_t tinv = c.inv(twisted);
    if (tinv < 0) return false;
    uint32_t u = c.mul(lead, static_cast<uint32_t>(tinv));
    quot[n - df] = c.add(quot[n - df], u);
    const PermMap& s = c.sigpow[n - df];
    for (size_t j = 0; j <= df; ++j) {
      uint32_t sub = c.mul(u, s.img[f[j]]);
      g[n - df + j] = c.add(g[n - df + j], c.neg(sub));
    }
    strip(g);
  }
  if (q) {
    strip(quot);
    *q = std::move(quot);
  }
  if (r) *r = std::move(g);
  return true;
}

std::vector<uint32_t> petit_mul(const Ctx& c, const IPoly& f, const std::vector<uint32_t>& g,
                                const std::vector<uint32_t>& h) {
  size_t m = f.size() - 1;
  IPoly gp(g), hp(h);
  strip(gp);
  strip(hp);
  IPoly prod = mul(c, gp, hp);
  IPoly r;
  right_divmod(c, std::move(prod), f, nullptr, &r);
  r.resize(m, 0);
  return r;
}

}  // namespace nacx::fastskew
