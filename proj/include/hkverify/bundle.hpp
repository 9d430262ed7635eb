#pragma once

#include "hkverify/blowup.hpp"
#include "hkverify/polynomial.hpp"

#include <map>
#include <string>

namespace hkverify {

// Pushforward bundle for c1(L) = nu^* mu_B(omega_B), omega_B^2 = 2a, x = y = 0.
struct ChernNumberTable {
    long long a = 0;
    Rational ch1_4;
    Rational ch1sq_ch2_paper;
    Rational ch1sq_ch2_derived;
    Rational ch1_ch3;
    Rational ch2_sq;
    Rational ch4;
    Rational chi_E;
    Rational chi_end;
    Rational chi_end0;

    // Entries keyed by their CLI names (ch1-4, ch1sq-ch2-paper, ..., chi-end0).
    std::map<std::string, Rational> entries() const;
};

struct GianniTerms {
    Rational c2_term;       // -(1/12) int c2 ch1^2
    Rational td3_term;      // degree-3 Todd class of X against the pulled-back ch1
    Rational quadric_term;  // (1/12)(D^2 + c2(X)) c1(L) pulled-back ch1
    Rational linear_term;   // -(1/4) D c1(L)^2 pulled-back ch1
    Rational cubic_term;    // (1/6) c1(L)^3 pulled-back ch1
    Rational sum() const { return c2_term + td3_term + quadric_term + linear_term + cubic_term; }
};

struct ChiEndTerms {
    Rational rank_term;  // r^2 chi(O)
    Rational c2_term;    // (1/12) int (8 ch2 - ch1^2) c2
    Rational top_term;   // int (8 ch4 - 2 ch1 ch3 + ch2^2)
    Rational total() const { return rank_term + c2_term + top_term; }
};

ChernNumberTable chern_numbers(long long a);
GianniTerms gianni_decomposition(long long a);
ChiEndTerms chi_end_terms(long long a);

// Stated value of int ch1^2 ch2 as printed, kept for the discrepancy record.
Rational ch1sq_ch2_stated(long long a);
// The same integral computed directly on the blow-up, independent of Delta = c2.
Rational ch1sq_ch2_blowup(long long a);
// int ch2 td2 through the pairing model.
Rational ch2_td2(long long a);

Rational chi_E(long long a);
Rational chi_end(long long a);
Rational chi_end0(long long a);

// Every entry interpolated exactly from a = 1..5. Each entry is a sum of products of at most two
// pairings that are affine in a, so degree <= 2 and five samples determine it with room to spare.
struct ChernPolynomials {
    std::map<std::string, Polynomial> entries;
    const Polynomial& at(const std::string& key) const { return entries.at(key); }
};

ChernPolynomials chern_polynomials();

struct AInvariantParts {
    long long rank = 4;
    Rational d = 54;
    long long fujiki_normalized = 3;
    Rational value() const { return Rational(rank * rank) * d / (4 * fujiki_normalized); }
};

Rational a_invariant();

}  // namespace hkverify
