#include "zpw/zp_set.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace zpw {

ZpSet ZpSet::from_residues(PrimeContext ctx,
                           std::span<const std::int64_t> values) {
  ZpSet s(ctx);
  for (std::int64_t v : values) {
    auto idx = static_cast<std::size_t>(ctx.reduce(v));
    if (!s.mask_[idx]) {
      s.mask_[idx] = true;
      ++s.count_;
    }
  }
  return s;
}

ZpSet ZpSet::from_mask(PrimeContext ctx, std::vector<bool> mask) {
  if (static_cast<std::int64_t>(mask.size()) != ctx.p())
    throw std::invalid_argument("ZpSet: mask length must equal p");
  ZpSet s(ctx);
  s.mask_ = std::move(mask);
  s.count_ = std::count(s.mask_.begin(), s.mask_.end(), true);
  return s;
}

ZpSet ZpSet::full(PrimeContext ctx) {
  ZpSet s(ctx);
  s.mask_.assign(static_cast<std::size_t>(ctx.p()), true);
  s.count_ = ctx.p();
  return s;
}

std::vector<std::int64_t> ZpSet::members() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (std::int64_t r = 0; r < ctx_.p(); ++r)
    if (mask_[static_cast<std::size_t>(r)]) out.push_back(r);
  return out;
}

std::vector<std::int64_t> ZpSet::signed_members() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (std::int64_t r = 0; r < ctx_.p(); ++r)
    if (mask_[static_cast<std::size_t>(r)])
      out.push_back(min_abs_rep(r, ctx_).value);
  std::sort(out.begin(), out.end());
  return out;
}

ZpSet complement(const ZpSet& a) {
  std::vector<bool> mask = a.mask();
  mask.flip();
  return ZpSet::from_mask(a.context(), std::move(mask));
}

ZpSet affine_dilate(const ZpSet& a, std::int64_t q, std::int64_t x0) {
  const PrimeContext& ctx = a.context();
  if (ctx.reduce(q) == 0)
    throw std::invalid_argument("affine_dilate: q must be nonzero mod p");
  std::vector<bool> mask(static_cast<std::size_t>(ctx.p()), false);
  const std::int64_t qr = ctx.reduce(q);
  const std::int64_t x0r = ctx.reduce(x0);
  for (std::int64_t r = 0; r < ctx.p(); ++r) {
    if (!a.mask()[static_cast<std::size_t>(r)]) continue;
    std::int64_t image = (qr * ctx.reduce(r - x0r)) % ctx.p();
    mask[static_cast<std::size_t>(image)] = true;
  }
  return ZpSet::from_mask(ctx, std::move(mask));
}

ZpSet interval_members(const ZpSet& a, std::int64_t n) {
  const PrimeContext& ctx = a.context();
  if (n < 0 || 2 * n >= ctx.p())
    throw std::invalid_argument(
        "interval_members: need 0 <= n < p/2 (window would wrap)");
  std::vector<bool> mask(static_cast<std::size_t>(ctx.p()), false);
  for (std::int64_t r = 0; r < ctx.p(); ++r) {
    if (!a.mask()[static_cast<std::size_t>(r)]) continue;
    if (std::abs(min_abs_rep(r, ctx).value) <= n)
      mask[static_cast<std::size_t>(r)] = true;
  }
  return ZpSet::from_mask(ctx, std::move(mask));
}

bool is_subset(const ZpSet& inner, const ZpSet& outer) {
  if (inner.modulus() != outer.modulus()) return false;
  for (std::int64_t r = 0; r < inner.modulus(); ++r)
    if (inner.mask()[static_cast<std::size_t>(r)] &&
        !outer.mask()[static_cast<std::size_t>(r)])
      return false;
  return true;
}

std::vector<std::int64_t> parse_int_list(const std::string& literal) {
  std::vector<std::int64_t> out;
  std::stringstream ss(literal);
  std::string token;
  while (std::getline(ss, token, ',')) {
    // trim
    auto b = token.find_first_not_of(" \t");
    auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    token = token.substr(b, e - b + 1);
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(token, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != token.size())
      throw std::invalid_argument("parse_int_list: bad integer '" + token +
                                  "'");
    out.push_back(v);
  }
  return out;
}

ZpSet parse_set_literal(PrimeContext ctx, const std::string& literal) {
  auto vals = parse_int_list(literal);
  return ZpSet::from_residues(ctx, vals);
}

ZpSet read_set_file(PrimeContext ctx, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_set_file: cannot open " + path);
  std::vector<std::int64_t> vals;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(b, e - b + 1);
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(token, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != token.size())
      throw std::invalid_argument(
          "read_set_file: expected one integer per line, got '" + token +
          "' in " + path);
    vals.push_back(v);
  }
  return ZpSet::from_residues(ctx, vals);
}

}  // namespace zpw
