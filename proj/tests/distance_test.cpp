#include <gtest/gtest.h>

#include <set>

#include "constacyclic/distance.hpp"

namespace cc = constacyclic;
using cc::Case;
using cc::Field;
using cc::u64;

TEST(Distance, SingleFactor) {
  auto d = cc::distance_single(3, 2, 4);
  EXPECT_EQ(d.value, 3u);
  EXPECT_EQ(d.label, Case::Beta);
  d = cc::distance_single(3, 2, 8);
  EXPECT_EQ(d.value, 9u);
  EXPECT_EQ(d.label, Case::TauK);
  EXPECT_EQ(cc::distance_single(2, 3, 7).value, 8u);
  EXPECT_EQ(cc::distance_single(5, 2, 0).value, 1u);
  EXPECT_EQ(cc::distance_single(5, 2, 0).label, Case::FullSpace);
  EXPECT_FALSE(cc::distance_single(3, 2, 9).value);
  EXPECT_EQ(cc::distance_single(3, 2, 9).label, Case::ZeroCode);
  EXPECT_EQ(cc::distance_single(7, 1, 1).label, Case::Low);
  EXPECT_THROW(cc::distance_single(3, 2, 10), cc::Error);
}

TEST(Distance, TwoFactor) {
  EXPECT_EQ(cc::distance_two_factor(3, 1, 2, 1).value, 3u);
  EXPECT_EQ(cc::distance_two_factor(3, 1, 2, 1).label, Case::T3);
  EXPECT_EQ(cc::distance_two_factor(3, 1, 3, 2).value, 6u);
  EXPECT_EQ(cc::distance_two_factor(3, 1, 3, 2).label, Case::T10);
  EXPECT_EQ(cc::distance_two_factor(3, 1, 2, 2).value, 3u);
  EXPECT_EQ(cc::distance_two_factor(3, 1, 2, 2).label, Case::T5);
  EXPECT_EQ(cc::distance_two_factor(3, 1, 0, 0).value, 1u);
  const auto swapped = cc::distance_two_factor(3, 1, 1, 2);
  EXPECT_EQ(swapped.value, 3u);
  EXPECT_TRUE(swapped.swapped);
  EXPECT_FALSE(cc::distance_two_factor(5, 1, 5, 5).value);
  EXPECT_THROW(cc::distance_two_factor(2, 1, 1, 1), cc::Error);
  EXPECT_THROW(cc::distance_two_factor(3, 1, 4, 1), cc::Error);
}

TEST(Distance, EveryRowIsReachable) {
  // p = 5, s = 3 has Low, Beta(1..3) and TauK(1..2, 1..4) classes
  std::set<Case> seen;
  for (u64 i = 0; i <= 125; ++i) {
    for (u64 j = 0; j <= 125; ++j) seen.insert(cc::distance_two_factor(5, 3, i, j).label);
  }
  for (const Case c : {Case::T1, Case::T2, Case::T3, Case::T4, Case::T5, Case::T6, Case::T7,
                       Case::T8, Case::T9, Case::T10, Case::T11}) {
    EXPECT_TRUE(seen.count(c)) << cc::case_name(c);
  }
}

TEST(Distance, RowValues) {
  // p = 5, s = 2: p^{s-1} = 5; Beta(b) = [5b+1, 5b+5]; TauK(1,t) = [20+t, 20+t]
  EXPECT_EQ(cc::distance_two_factor(5, 2, 25, 3).label, Case::T4);
  EXPECT_EQ(cc::distance_two_factor(5, 2, 25, 3).value, 4u);
  EXPECT_EQ(cc::distance_two_factor(5, 2, 16, 7).value, 5u);  // min{3+2, 2(1+2)}
  EXPECT_EQ(cc::distance_two_factor(5, 2, 8, 7).value, 3u);
  EXPECT_EQ(cc::distance_two_factor(5, 2, 22, 12).label, Case::T6);
  EXPECT_EQ(cc::distance_two_factor(5, 2, 22, 12).value, 8u);
  EXPECT_EQ(cc::distance_two_factor(5, 2, 23, 23).label, Case::T7);
  EXPECT_EQ(cc::distance_two_factor(5, 2, 23, 23).value, 20u);
  EXPECT_EQ(cc::distance_two_factor(5, 2, 24, 21).label, Case::T8);
  EXPECT_EQ(cc::distance_two_factor(5, 2, 24, 21).value, 20u);  // min{2*2*5, 5*5}
  EXPECT_EQ(cc::distance_two_factor(5, 2, 25, 17).label, Case::T10);
  EXPECT_EQ(cc::distance_two_factor(5, 2, 25, 17).value, 10u);
  EXPECT_EQ(cc::distance_two_factor(5, 2, 25, 22).label, Case::T11);
  EXPECT_EQ(cc::distance_two_factor(5, 2, 25, 22).value, 30u);
  // p = 3, s = 3: TauK(1,t) = [18+3(t-1)+1, 18+3t], TauK(2,t) = [24+t, 24+t]
  EXPECT_EQ(cc::distance_two_factor(3, 3, 25, 20).label, Case::T9);
  EXPECT_EQ(cc::distance_two_factor(3, 3, 25, 20).value, 12u);
}

TEST(Distance, Negacyclic) {
  EXPECT_EQ(cc::negacyclic_distance(7, 1, 1, 5, std::nullopt).value, 6u);
  EXPECT_EQ(cc::negacyclic_distance(5, 1, 1, 2, 1).value, 3u);
  EXPECT_EQ(cc::negacyclic_distance(7, 2, 1, 2, 1).value, 3u);
  EXPECT_THROW(cc::negacyclic_distance(7, 2, 1, 2, std::nullopt), cc::Error);
  EXPECT_THROW(cc::negacyclic_distance(7, 1, 1, 2, 1), cc::Error);
}

TEST(Distance, CertificateExamples) {
  const Field f3(3, 1), f5(5, 1);
  const auto gamma = f3.from_int(2);
  const auto low = cc::build_single(f3, 1, 2, gamma, 2);
  const auto cert = *cc::distance_of(low).certificate;
  EXPECT_EQ(cert, cc::Polynomial::binomial(3, gamma.pow(3)));

  const auto xi = f5.from_int(2);
  const auto row3 = cc::build_two_factor(f5, 1, 2, xi, 8, 3);
  const auto r3 = cc::distance_of(row3);
  ASSERT_EQ(r3.label, Case::T3);
  const auto x = cc::Polynomial::x(f5);
  const auto expected = cc::Polynomial::monomial(f5.one(), 20) -
                        f5.from_int(2) * xi.pow(10) * cc::Polynomial::monomial(f5.one(), 10) +
                        cc::Polynomial::constant(xi.pow(20));
  EXPECT_EQ(*r3.certificate, expected);

  const auto row4 = cc::build_two_factor(f5, 1, 1, xi, 5, 1);
  const auto r4 = cc::distance_of(row4);
  ASSERT_EQ(r4.label, Case::T4);
  EXPECT_EQ(*r4.certificate, cc::pow(x - cc::Polynomial::constant(xi), 5) *
                                 (x + cc::Polynomial::constant(xi)));
  EXPECT_EQ(cc::weight(*r4.certificate), 4u);

  const auto zero = cc::build_single(f3, 1, 1, gamma, 3);
  EXPECT_THROW(cc::certificate_for(zero, cc::distance_single(3, 1, 3)), cc::Error);
}

TEST(DistanceProperty, SwapSymmetry) {
  for (const u64 p : {3, 5, 7}) {
    for (u64 s = 1; s <= 2; ++s) {
      const u64 ps = cc::ipow(p, s);
      for (u64 i = 0; i <= ps; ++i) {
        for (u64 j = 0; j <= ps; ++j) {
          EXPECT_EQ(cc::distance_two_factor(p, s, i, j).value,
                    cc::distance_two_factor(p, s, j, i).value);
        }
      }
    }
  }
}

TEST(DistanceProperty, Monotone) {
  for (const u64 p : {2, 3, 5, 7}) {
    for (u64 s = 1; s <= 3; ++s) {
      const u64 ps = cc::ipow(p, s);
      for (u64 i = 0; i + 1 < ps; ++i) {
        EXPECT_LE(cc::distance_single(p, s, i).value, cc::distance_single(p, s, i + 1).value)
            << p << " " << s << " " << i;
      }
    }
  }
  for (const u64 p : {3, 5}) {
    for (u64 s = 1; s <= 2; ++s) {
      const u64 ps = cc::ipow(p, s);
      for (u64 i = 0; i <= ps; ++i) {
        for (u64 j = 0; j <= ps; ++j) {
          if (i == ps && j == ps) continue;
          const auto d = *cc::distance_two_factor(p, s, i, j).value;
          if (i < ps && !(i + 1 == ps && j == ps)) {
            EXPECT_LE(d, *cc::distance_two_factor(p, s, i + 1, j).value);
          }
          if (j < ps && !(j + 1 == ps && i == ps)) {
            EXPECT_LE(d, *cc::distance_two_factor(p, s, i, j + 1).value);
          }
        }
      }
    }
  }
}

TEST(DistanceProperty, ValuePresence) {
  for (const u64 p : {3, 5}) {
    for (u64 s = 1; s <= 2; ++s) {
      const u64 ps = cc::ipow(p, s);
      for (u64 i = 0; i <= ps; ++i) {
        const auto d = cc::distance_single(p, s, i).value;
        EXPECT_EQ(d.has_value(), i != ps);
        EXPECT_EQ(d == 1u, i == 0);
        for (u64 j = 0; j <= ps; ++j) {
          const auto e = cc::distance_two_factor(p, s, i, j).value;
          EXPECT_EQ(e.has_value(), !(i == ps && j == ps));
          EXPECT_EQ(e == 1u, i == 0 && j == 0);
        }
      }
    }
  }
}

TEST(DistanceProperty, CertificatesAreMinimumWeightCodewords) {
  const Field f3(3, 1), f9(3, 2), f2(2, 1);
  std::vector<cc::CodeInstance> codes;
  for (u64 i = 0; i < 27; ++i) codes.push_back(cc::build_single(f3, 1, 3, f3.one(), i));
  for (u64 i = 0; i < 16; ++i) codes.push_back(cc::build_single(f2, 1, 4, f2.one(), i));
  const auto xi = cc::parse_element(f9, "1,1");
  for (u64 i = 0; i <= 9; ++i) {
    for (u64 j = 0; j <= 9; ++j) {
      if (i == 9 && j == 9) continue;
      codes.push_back(cc::build_two_factor(f9, 2, 2, xi, i, j));
    }
  }
  for (const auto& code : codes) {
    const auto r = cc::distance_of(code);
    ASSERT_TRUE(r.certificate);
    EXPECT_TRUE(cc::is_codeword(code, *r.certificate));
    EXPECT_EQ(cc::weight(*r.certificate), *r.value) << code.i() << " " << code.j().value_or(0);
  }
}
