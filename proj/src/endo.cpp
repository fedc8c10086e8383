#include "torelli/endo.hpp"

namespace torelli {

namespace {

FreeWord gen(int genus, Generator::Kind k, int i, int e = 1) {
  return FreeWord::generator(genus, {k, i}, e);
}

FreeWord conj(const FreeWord &lambda, const FreeWord &x) {
  return lambda.inverse() * x * lambda;
}

} // namespace

SurfaceEndo::SurfaceEndo(int genus, std::map<Generator, FreeWord> images,
                         std::string label)
    : genus_(genus), images_(std::move(images)), label_(std::move(label)) {
  if (genus < 1) throw WordError("genus must be >= 1");
  for (auto kind : {Generator::Alpha, Generator::Beta}) {
    for (int i = 1; i <= genus; ++i) {
      auto it = images_.find({kind, i});
      if (it == images_.end())
        images_.emplace(Generator{kind, i},
                        FreeWord::generator(genus, {kind, i}));
      else if (it->second.genus() != genus)
        throw WordError("image genus mismatch in endomorphism");
    }
  }
}

SurfaceEndo SurfaceEndo::identity(int genus) {
  return SurfaceEndo(genus, {}, "id");
}

const FreeWord &SurfaceEndo::image(Generator g) const {
  auto it = images_.find(g);
  if (it == images_.end()) throw WordError("generator not in endomorphism");
  return it->second;
}

FreeWord SurfaceEndo::apply(const FreeWord &w) const {
  if (w.genus() != genus_) throw WordError("genus mismatch in apply");
  FreeWord out(genus_);
  for (const Letter &l : w.letters()) {
    const FreeWord &im = image(l.gen);
    out = out * (l.exponent == 1 ? im : im.inverse());
  }
  return out;
}

SurfaceEndo SurfaceEndo::compose(const SurfaceEndo &rhs) const {
  if (genus_ != rhs.genus_) throw WordError("genus mismatch in compose");
  std::map<Generator, FreeWord> images;
  for (const auto &[g, w] : rhs.images_) images.emplace(g, apply(w));
  std::string label;
  if (!label_.empty() && !rhs.label_.empty()) label = label_ + "*" + rhs.label_;
  return SurfaceEndo(genus_, std::move(images), std::move(label));
}

bool SurfaceEndo::validates() const { return boundary_defect().empty(); }

FreeWord SurfaceEndo::boundary_defect() const {
  FreeWord b = boundary_word(genus_);
  return apply(b) * b.inverse();
}

bool SurfaceEndo::is_identity() const {
  for (const auto &[g, w] : images_)
    if (!(w == FreeWord::generator(genus_, g))) return false;
  return true;
}

std::map<std::string, SurfaceEndo> twist_library(int genus) {
  std::map<std::string, SurfaceEndo> lib;
  auto add = [&](const std::string &name, std::map<Generator, FreeWord> im) {
    lib.emplace(name, SurfaceEndo(genus, std::move(im), name));
  };

  // t_a<i>: left twist along the meridian alpha_i.
  for (int i = 1; i <= genus; ++i) {
    FreeWord ai = gen(genus, Generator::Alpha, i);
    FreeWord bi = gen(genus, Generator::Beta, i);
    add("t_a" + std::to_string(i), {{{Generator::Beta, i}, ai.inverse() * bi}});
    add("t_a" + std::to_string(i) + "^-1", {{{Generator::Beta, i}, ai * bi}});
  }

  // t_a<k><l>: twist along the curve alpha_kl around handles k and l,
  // homotopy class lambda = alpha_l alpha_k.  For adjacent handles (l = k+1)
  // the images are the lambda-conjugation pattern with a weight-4 correction
  // [alpha_l^-1, alpha_k^-1] on beta_l (required for boundary preservation;
  // invisible at the K_3 level).  Non-adjacent pairs are conjugates of the
  // adjacent twist by handle-swap mapping classes.
  auto handle_swap = [&](int j) { // exchanges handles j, j+1
    FreeWord K = commutator(gen(genus, Generator::Beta, j + 1, -1),
                            gen(genus, Generator::Alpha, j + 1));
    return SurfaceEndo(
        genus,
        {{{Generator::Alpha, j}, gen(genus, Generator::Alpha, j + 1)},
         {{Generator::Beta, j}, gen(genus, Generator::Beta, j + 1)},
         {{Generator::Alpha, j + 1}, conj(K, gen(genus, Generator::Alpha, j))},
         {{Generator::Beta, j + 1}, conj(K, gen(genus, Generator::Beta, j))}});
  };
  auto handle_swap_inv = [&](int j) {
    FreeWord K = commutator(gen(genus, Generator::Beta, j, -1),
                            gen(genus, Generator::Alpha, j));
    return SurfaceEndo(
        genus,
        {{{Generator::Alpha, j}, conj(K.inverse(), gen(genus, Generator::Alpha, j + 1))},
         {{Generator::Beta, j}, conj(K.inverse(), gen(genus, Generator::Beta, j + 1))},
         {{Generator::Alpha, j + 1}, gen(genus, Generator::Alpha, j)},
         {{Generator::Beta, j + 1}, gen(genus, Generator::Beta, j)}});
  };
  auto adjacent_akl = [&](int k, bool inverse) {
    int l = k + 1;
    FreeWord ak = gen(genus, Generator::Alpha, k);
    FreeWord al = gen(genus, Generator::Alpha, l);
    FreeWord lam = al * ak;
    FreeWord tail = commutator(al.inverse(), ak.inverse());
    if (!inverse)
      return SurfaceEndo(
          genus, {{{Generator::Alpha, k}, conj(lam, ak)},
                  {{Generator::Alpha, l}, conj(lam, al)},
                  {{Generator::Beta, k}, lam.inverse() * gen(genus, Generator::Beta, k)},
                  {{Generator::Beta, l},
                   lam.inverse() * gen(genus, Generator::Beta, l) * tail}});
    return SurfaceEndo(
        genus, {{{Generator::Alpha, k}, conj(lam.inverse(), ak)},
                {{Generator::Alpha, l}, conj(lam.inverse(), al)},
                {{Generator::Beta, k}, lam * gen(genus, Generator::Beta, k)},
                {{Generator::Beta, l}, lam * gen(genus, Generator::Beta, l) * lam *
                                           tail.inverse() * lam.inverse()}});
  };
  for (int k = 1; k <= genus; ++k) {
    for (int l = k + 1; l <= genus; ++l) {
      for (bool inverse : {false, true}) {
        SurfaceEndo t = adjacent_akl(l - 1, inverse);
        for (int j = l - 2; j >= k; --j)
          t = handle_swap(j).compose(t).compose(handle_swap_inv(j));
        std::string name = "t_a" + std::to_string(k) + std::to_string(l) +
                           (inverse ? "^-1" : "");
        t.set_label(name);
        lib.emplace(name, std::move(t));
      }
    }
  }

  // t_d: twist along the separating curve delta enclosing the first handle,
  // lambda = [alpha_1, beta_1^-1].
  {
    FreeWord a1 = gen(genus, Generator::Alpha, 1);
    FreeWord b1 = gen(genus, Generator::Beta, 1);
    FreeWord lam = commutator(a1, b1.inverse());
    add("t_d", {{{Generator::Alpha, 1}, conj(lam, a1)},
                {{Generator::Beta, 1}, conj(lam, b1)}});
    add("t_d^-1", {{{Generator::Alpha, 1}, conj(lam.inverse(), a1)},
                   {{Generator::Beta, 1}, conj(lam.inverse(), b1)}});
  }

  // t_e: t_epsilon t_{alpha_g}^-1 where epsilon has class
  // lambda = beta_g^-1 alpha_g^-1 beta_g [alpha_{g-1}, beta_{g-1}^-1]; the
  // commutator orientation is forced by boundary preservation (lambda must
  // centralize the partial boundary word).
  if (genus >= 2) {
    int g = genus;
    FreeWord ag = gen(genus, Generator::Alpha, g);
    FreeWord bg = gen(genus, Generator::Beta, g);
    FreeWord ag1 = gen(genus, Generator::Alpha, g - 1);
    FreeWord bg1 = gen(genus, Generator::Beta, g - 1);
    FreeWord lam = bg.inverse() * ag.inverse() * bg * commutator(ag1, bg1.inverse());
    add("t_e", {{{Generator::Alpha, g - 1}, conj(lam, ag1)},
                {{Generator::Beta, g - 1}, conj(lam, bg1)},
                {{Generator::Beta, g}, ag * bg * lam}});
    add("t_e^-1", {{{Generator::Alpha, g - 1}, conj(lam.inverse(), ag1)},
                   {{Generator::Beta, g - 1}, conj(lam.inverse(), bg1)},
                   {{Generator::Beta, g}, ag.inverse() * bg * lam.inverse()}});
  }

  return lib;
}

} // namespace torelli
