#include "steinberg_rsk/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace srsk {

void CheckResult::fail(std::string what) {
  passed = false;
  if (failures.size() < 10) failures.push_back(std::move(what));
}

namespace {

template <class Body>
CheckResult timed(std::string name, Body&& body) {
  CheckResult r;
  r.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string pp_string(const PartialPermutation& t) {
  std::string out = "PP(" + std::to_string(t.p()) + "," + std::to_string(t.q()) + "){";
  for (const auto& [r, c] : t.ones()) out += "(" + std::to_string(r) + "," + std::to_string(c) + ")";
  return out + "}";
}

std::string triple_string(const CorrespondenceTriple& tr) {
  return tr.diagram.to_string() + " Q=" + to_string(tr.q_tab) + " P=" + to_string(tr.p_tab);
}

Partition expected_module_z_type(Sign kind, int k) {
  std::vector<int> parts;
  if (k % 2 == 1) {
    const int n = (k - 1) / 2;
    parts.push_back(n + 1);
    parts.insert(parts.end(), static_cast<std::size_t>(n), 1);
  } else if (kind == Sign::Minus) {
    const int n = k / 2;
    parts.push_back(n + 1);
    parts.insert(parts.end(), static_cast<std::size_t>(n - 1), 1);
  } else {
    const int n = k / 2;
    parts.push_back(n);
    parts.insert(parts.end(), static_cast<std::size_t>(n), 1);
  }
  return Partition::from_unsorted(std::move(parts));
}

Sign leftmost_sign(Sign generator, int k) { return k % 2 == 1 ? generator : flip(generator); }

}  // namespace

CheckResult check_census(const Correspondence& corr, int pmax, int qmax, Rng& rng) {
  return timed("census identity", [&](CheckResult& r) {
    for (int p = 1; p <= pmax; ++p) {
      for (int q = 1; q <= qmax; ++q) {
        const CensusReport report = census(corr, p, q, rng);
        ++r.cases;
        if (!report.identity_holds) {
          r.fail("PP(" + std::to_string(p) + "," + std::to_string(q) + "): " +
                 (report.failures.empty() ? "count mismatch" : report.failures.front()));
        }
      }
    }
    const std::pair<std::pair<int, int>, std::int64_t> spots[] = {{{1, 1}, 2}, {{2, 2}, 7}, {{2, 3}, 13}, {{3, 3}, 34}};
    for (const auto& [pq, expected] : spots) {
      if (pq.first > pmax || pq.second > qmax) continue;
      const auto listed = static_cast<std::int64_t>(enumerate_pp(pq.first, pq.second).size());
      if (listed != expected || pp_count(pq.first, pq.second) != expected) {
        r.fail("|PP(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")| = " + std::to_string(listed) +
               ", expected " + std::to_string(expected));
      }
    }
  });
}

CheckResult check_round_trip(const Correspondence& corr, int pmax, int qmax, Rng& rng) {
  return timed("round trip inverse(forward(t)) = t", [&](CheckResult& r) {
    for (int p = 1; p <= pmax; ++p) {
      for (int q = 1; q <= qmax; ++q) {
        for (const auto& t : enumerate_pp(p, q)) {
          ++r.cases;
          if (!(corr.inverse(corr.forward(t, rng), rng) == t)) r.fail(pp_string(t));
        }
      }
    }
  });
}

CheckResult check_round_trip_sampled(const Correspondence& corr, int p, int q, int samples, Rng& rng) {
  return timed("sampled round trip on PP(" + std::to_string(p) + "," + std::to_string(q) + ")", [&](CheckResult& r) {
    const auto all = enumerate_pp(p, q);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int s = 0; s < samples; ++s) {
      const auto& t = all[pick(rng)];
      ++r.cases;
      if (!(corr.inverse(corr.forward(t, rng), rng) == t)) r.fail(pp_string(t));
    }
  });
}

CheckResult check_triple_round_trip(const Correspondence& corr, int pmax, int qmax, Rng& rng) {
  return timed("round trip forward(inverse(tr)) = tr", [&](CheckResult& r) {
    for (int p = 1; p <= pmax; ++p) {
      for (int q = 1; q <= qmax; ++q) {
        for (const auto& tr : enumerate_triples(p, q)) {
          ++r.cases;
          if (!(corr.forward(corr.inverse(tr, rng), rng) == tr)) r.fail(triple_string(tr));
        }
      }
    }
  });
}

CheckResult check_oracle_agreement(const Correspondence& corr, const OracleConfig& config, int pmax, int qmax,
                                   Rng& rng) {
  return timed("oracle agreement", [&](CheckResult& r) {
    for (int p = 1; p <= pmax; ++p) {
      for (int q = 1; q <= qmax; ++q) {
        for (const auto& t : enumerate_pp(p, q)) {
          ++r.cases;
          const CorrespondenceTriple tr = corr.forward(t, rng);
          const ConormalCertificate cert = generic_conormal_sample(t, config, rng).certificate;
          const CorrespondenceTriple geometric{cert.diagram, cert.q_tab, cert.p_tab};
          if (!(tr == geometric)) {
            r.fail(pp_string(t) + ": combinatorial " + triple_string(tr) + " vs oracle " + triple_string(geometric));
          }
          const RskPair hats = corr.rsk().forward(tau_hat(t), rng);
          if (!(hats.first == cert.qhat && hats.second == cert.phat)) r.fail(pp_string(t) + ": (Q^, P^) differ");
        }
      }
    }
  });
}

CheckResult check_admissibility(const Correspondence& corr, int pmax, int qmax, int image_max, Rng& rng) {
  return timed("admissibility equivalences", [&](CheckResult& r) {
    for (int p = 1; p <= pmax; ++p) {
      for (int q = 1; q <= qmax; ++q) {
        const bool with_image = p <= image_max && q <= image_max;
        std::vector<SignedYoungDiagram> image;
        if (with_image) {
          for (const auto& t : enumerate_pp(p, q)) image.push_back(corr.pr(t, rng));
        }
        for (const auto& d : enumerate_syd(Signature{q, p})) {
          ++r.cases;
          const bool shape_identity = is_admissible(d);
          const bool odd_rows = odd_rows_uniform(d);
          const bool dimension = satisfies_dimension_identity(d);
          const bool maximal = is_closure_maximal(d);
          bool agree = odd_rows == shape_identity && dimension == shape_identity && maximal == shape_identity;
          if (with_image) {
            const bool in_image = std::find(image.begin(), image.end(), d) != image.end();
            agree = agree && in_image == shape_identity;
          }
          if (!agree) r.fail(d.to_string());
        }
      }
    }
  });
}

CheckResult check_module_types(const OracleConfig& config, int kmax, int samples, int max_dim, Rng& rng) {
  return timed("Jordan type of z on modules", [&](CheckResult& r) {
    for (int k = 1; k <= kmax; ++k) {
      for (Sign kind : {Sign::Plus, Sign::Minus}) {
        ++r.cases;
        const Partition expected = expected_module_z_type(kind, k);
        const ModulePoint pt = module_matrices(kind, k, config.field);
        const SignedYoungDiagram row({SignedRow{k, leftmost_sign(kind, k)}});
        if (jordan_type(z_of(pt)) != expected || z_shape(row) != expected) {
          r.fail(std::string("U_") + std::to_string(k) + sign_char(kind));
        }
        if (!(syd_of_pair(pt) == row)) r.fail(std::string("syd_of_pair on U_") + std::to_string(k) + sign_char(kind));
      }
    }
    std::uniform_int_distribution<int> dim_pick(1, max_dim);
    std::bernoulli_distribution coin(0.5);
    for (int s = 0; s < samples; ++s) {
      ++r.cases;
      int left = dim_pick(rng);
      std::vector<SignedRow> rows;
      while (left > 0) {
        const int k = std::uniform_int_distribution<int>(1, left)(rng);
        rows.push_back({k, leftmost_sign(coin(rng) ? Sign::Plus : Sign::Minus, k)});
        left -= k;
      }
      const SignedYoungDiagram d(std::move(rows));
      const ModulePoint base = module_of(d, config.field);
      // Random change of basis on V_q and V_p.
      const FieldMatrix g = random_invertible(base.q(), config.field, rng);
      const FieldMatrix h = random_invertible(base.p(), config.field, rng);
      const ModulePoint pt{h * base.x * inverse(g), g * base.y * inverse(h)};
      if (jordan_type(z_of(pt)) != z_shape(d)) r.fail("z type of " + d.to_string());
      if (!(syd_of_pair(pt) == d)) r.fail("syd_of_pair of " + d.to_string());
    }
  });
}

CheckResult check_duality(const Correspondence& corr, const OracleConfig& config, int pmax, int qmax, Rng& rng) {
  return timed("duality", [&](CheckResult& r) {
    for (int p = 1; p <= pmax; ++p) {
      for (int q = 1; q <= qmax; ++q) {
        for (const auto& t : enumerate_pp(p, q)) {
          ++r.cases;
          const PartialPermutation d = corr.dual(t, rng);
          if (d.p() != q || d.q() != p) r.fail(pp_string(t) + ": dual has the wrong ambient");
          if (!(corr.dual(d, rng) == t)) r.fail(pp_string(t) + ": dual is not an involution");
          if (!(dual_orbit_check(t, config, rng) == d)) r.fail(pp_string(t) + ": orbit of generic y differs");
        }
      }
    }
    if (pmax >= 2 && qmax >= 2) {
      const PartialPermutation zero(2, 2);
      const PartialPermutation anti(2, 2, {{1, 2}, {2, 1}});
      const PartialPermutation ident(2, 2, {{1, 1}, {2, 2}});
      const PartialPermutation e12(2, 2, {{1, 2}});
      const PartialPermutation e21(2, 2, {{2, 1}});
      const std::pair<PartialPermutation, PartialPermutation> fixtures[] = {
          {zero, anti}, {anti, zero}, {ident, e12}, {e12, ident}, {e21, e21}};
      for (const auto& [from, to] : fixtures) {
        ++r.cases;
        if (!(corr.dual(from, rng) == to)) r.fail("fixture " + pp_string(from));
      }
    }
  });
}

CheckResult check_tau_hat(const OracleConfig& config, int pmax, int qmax, Rng& rng) {
  return timed("bordered Schubert position equals tau_hat", [&](CheckResult& r) {
    for (int p = 1; p <= pmax; ++p) {
      for (int q = 1; q <= qmax; ++q) {
        const Flag f = bordered_f_flag(static_cast<std::size_t>(p), static_cast<std::size_t>(q), config.field);
        for (const auto& t : enumerate_pp(p, q)) {
          ++r.cases;
          FieldMatrix standard(static_cast<std::size_t>(p), static_cast<std::size_t>(q), config.field);
          for (const auto& [row, col] : t.ones()) standard.set(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1), 1);
          const MarginMatrix expected = tau_hat(t);
          if (!(schubert_position(bordered_e_flag(standard), f) == expected)) r.fail(pp_string(t) + " (standard point)");
          const FieldMatrix x = sample_orbit_point(t, config.field, rng);
          if (!(schubert_position(bordered_e_flag(x), f) == expected)) r.fail(pp_string(t) + " (random orbit point)");
        }
      }
    }
  });
}

CheckResult check_tableau_engine(const OracleConfig& config, int max_boxes, int pmax, int qmax, Rng& rng) {
  return timed("tableau engine", [&](CheckResult& r) {
    auto check_one = [&](const RowStandardTableau& t) {
      ++r.cases;
      const RowStandardTableau ev = evacuate(t);
      if (!(evacuate(ev) == t)) r.fail("evacuation is not an involution on " + to_string(t));
      if (ev.shape() != t.shape() || ev.content() != t.content().reversed()) r.fail("evacuation shape or content on " + to_string(t));
      if (!(rectify(t, 0) == t)) r.fail("rectify(t, 0) != t for " + to_string(t));
      const std::vector<int> content = t.content().parts();
      for (std::size_t i = 0; i <= t.length(); ++i) {
        const RowStandardTableau rt = rectify(t, i);
        const std::vector<int> tail(content.begin() + static_cast<std::ptrdiff_t>(i), content.end());
        if (rt.content().parts() != tail || rt.shape().size() != t.shape().size() - t.at(i).size()) {
          r.fail("rectify content or size for " + to_string(t) + " at " + std::to_string(i));
        }
      }
    };
    for (int n = 1; n <= max_boxes; ++n) {
      for (const auto& lam : partitions_of(n)) {
        for (const auto& t : enumerate_syt(lam)) check_one(t);
      }
    }
    for (int total = 2; total <= max_boxes; ++total) {
      for (int m = 1; m < total; ++m) {
        const int k = total - m;
        std::vector<int> ones_then_m(static_cast<std::size_t>(k), 1);
        ones_then_m.push_back(m);
        std::vector<int> m_then_ones{m};
        m_then_ones.insert(m_then_ones.end(), static_cast<std::size_t>(k), 1);
        for (const auto& t : enumerate_tableaux(Composition(ones_then_m))) check_one(t);
        for (const auto& t : enumerate_tableaux(Composition(m_then_ones))) check_one(t);
      }
    }
    // Jeu de taquin against Tab(z | V/F_i) at generic conormal points.
    for (int p = 1; p <= pmax; ++p) {
      for (int q = 1; q <= qmax; ++q) {
        for (const auto& t : enumerate_pp(p, q)) {
          ++r.cases;
          const ConormalCertificate cert = generic_conormal_sample(t, config, rng).certificate;
          for (std::size_t i = 0; i < cert.phat_quotients.size(); ++i) {
            if (!(rectify(cert.phat, i) == cert.phat_quotients[i])) r.fail(pp_string(t) + ": Rect(P^, " + std::to_string(i) + ")");
          }
          for (std::size_t i = 0; i < cert.qhat_quotients.size(); ++i) {
            if (!(rectify(cert.qhat, i) == cert.qhat_quotients[i])) r.fail(pp_string(t) + ": Rect(Q^, " + std::to_string(i) + ")");
          }
          if (!(evacuate(cert.phat) == cert.phat_evacuation)) r.fail(pp_string(t) + ": ev P^");
          if (!(evacuate(cert.qhat) == cert.qhat_evacuation)) r.fail(pp_string(t) + ": ev Q^");
        }
      }
    }
  });
}

CheckResult check_poset_properties(int pmax, int qmax) {
  return timed("closure order properties", [&](CheckResult& r) {
    for (int p = 1; p <= pmax; ++p) {
      for (int q = 1; q <= qmax; ++q) {
        const auto nodes = enumerate_syd(Signature{q, p});
        const std::size_t n = nodes.size();
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
        for (std::size_t i = 0; i < n; ++i) {
          const auto& d = nodes[i];
          ++r.cases;
          if (!dominance_leq(shape(d), add(lambda_plus(d), lambda_minus(d)))) r.fail("sh not below sum: " + d.to_string());
          for (std::size_t j = 0; j < n; ++j) {
            const auto& e = nodes[j];
            leq[i][j] = closure_leq(d, e);
            if (!leq[i][j]) continue;
            if (!dominance_leq(shape(d), shape(e))) r.fail("shape not monotone: " + d.to_string() + " <= " + e.to_string());
            if (!dominance_leq(lambda_plus(d), lambda_plus(e)) || !dominance_leq(lambda_minus(d), lambda_minus(e))) {
              r.fail("(L+, L-) not monotone: " + d.to_string() + " <= " + e.to_string());
            }
          }
        }
        for (std::size_t i = 0; i < n; ++i) {
          if (!leq[i][i]) r.fail("not reflexive at " + nodes[i].to_string());
          for (std::size_t j = 0; j < n; ++j) {
            if (i != j && leq[i][j] && leq[j][i]) r.fail("not antisymmetric: " + nodes[i].to_string() + ", " + nodes[j].to_string());
            if (!leq[i][j]) continue;
            for (std::size_t k = 0; k < n; ++k) {
              if (leq[j][k] && !leq[i][k]) r.fail("not transitive at " + nodes[i].to_string());
            }
          }
        }
      }
    }
  });
}

CheckResult check_fast_path(const Correspondence& corr, const OracleConfig& config, int max_size, Rng& rng) {
  return timed("fast path equals oracle", [&](CheckResult& r) {
    if (!corr.rsk().fast()) r.fail("no calibrated convention; running oracle-only");
    for (const auto& sigma : bordered_margin_matrices(max_size)) {
      ++r.cases;
      if (!(corr.rsk().forward(sigma, rng) == variant_rsk_oracle(sigma, config, rng))) {
        r.fail("margin matrix differs from oracle");
      }
    }
  });
}

std::vector<CheckResult> verify_all(const Correspondence& corr, const OracleConfig& config, int pmax, int qmax,
                                    Rng& rng) {
  const int bound = std::max(pmax, qmax);
  return {
      check_census(corr, pmax, qmax, rng),
      check_round_trip(corr, pmax, qmax, rng),
      check_triple_round_trip(corr, pmax, qmax, rng),
      check_oracle_agreement(corr, config, pmax, qmax, rng),
      check_admissibility(corr, pmax, qmax, bound, rng),
      check_module_types(config, 9, 100, 10, rng),
      check_duality(corr, config, pmax, qmax, rng),
      check_tau_hat(config, pmax, qmax, rng),
      check_tableau_engine(config, 6, pmax, qmax, rng),
      check_poset_properties(pmax, qmax),
      check_fast_path(corr, config, bound, rng),
  };
}

}  // namespace srsk
