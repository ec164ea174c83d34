// Copyright 2026 The Clevershop Authors
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

// Core model: books, shops with threshold discounts, offers, assignments and
// exact cost evaluation. Every solver and generator in the library builds on
// the types in this header.

#ifndef CLEVERSHOP_INSTANCE_HPP
#define CLEVERSHOP_INSTANCE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace clevershop {

// All money amounts (prices, discounts, thresholds, budgets) are integral.
using Money = std::int64_t;

using BookIndex = std::size_t;
using ShopIndex = std::size_t;

struct DiscountRule {
  Money discount = 0;
  Money threshold = 0;

  friend bool operator==(const DiscountRule&, const DiscountRule&) = default;
};

struct Offer {
  BookIndex book = 0;
  ShopIndex shop = 0;
  Money price = 0;

  friend bool operator==(const Offer&, const Offer&) = default;
};

// Unvalidated instance description, as produced by parsers and generators.
struct InstanceData {
  std::size_t book_count = 0;
  std::vector<std::string> book_names;  // empty, or one entry per book
  std::vector<DiscountRule> shops;
  std::vector<Offer> offers;
  std::optional<Money> budget;
};

class Instance;

/// Checks every instance invariant and returns the validated instance.
/// Throws Error with the first violation found: DanglingIndex,
/// NegativeValue, DuplicateOffer or BookUncovered.
Instance validate_instance(InstanceData raw);

// A validated Clever Shopper instance. Immutable; offers are kept sorted by
// (book, shop).
class Instance {
 public:
  std::size_t book_count() const noexcept { return book_count_; }
  std::size_t shop_count() const noexcept { return rules_.size(); }

  const DiscountRule& rule(ShopIndex shop) const { return rules_.at(shop); }
  std::span<const DiscountRule> rules() const noexcept { return rules_; }

  std::span<const Offer> offers() const noexcept { return offers_; }
  std::span<const Offer> offers_of_book(BookIndex book) const;
  std::span<const Offer> offers_of_shop(ShopIndex shop) const;

  std::optional<Money> price(BookIndex book, ShopIndex shop) const;

  const std::optional<Money>& budget() const noexcept { return budget_; }
  const std::string& book_name(BookIndex book) const;

  // Sum of all offer prices.
  Money total_offer_value() const noexcept { return total_offer_value_; }

  // Same books, shops and offers with a different budget.
  Instance with_budget(std::optional<Money> budget) const;

  InstanceData to_data() const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.book_count_ == b.book_count_ && a.rules_ == b.rules_ &&
           a.offers_ == b.offers_ && a.budget_ == b.budget_;
  }

 private:
  Instance() = default;
  friend Instance validate_instance(InstanceData raw);

  std::size_t book_count_ = 0;
  std::vector<std::string> book_names_;
  std::vector<DiscountRule> rules_;
  std::vector<Offer> offers_;                // sorted by (book, shop)
  std::vector<std::size_t> book_begin_;      // book_count_ + 1 offsets
  std::vector<std::vector<Offer>> by_shop_;  // sorted by book
  std::optional<Money> budget_;
  Money total_offer_value_ = 0;
};

// Total map book -> shop.
struct Assignment {
  std::vector<ShopIndex> choice;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct SolveResult {
  Assignment assignment;
  Money total_cost = 0;
  Money total_discount = 0;
  std::vector<Money> per_shop_spend;  // pre-discount, indexed by shop

  Money gross() const noexcept { return total_cost + total_discount; }

  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

// The threshold function: `rule.discount` iff spend >= rule.threshold.
constexpr Money discount_earned(const DiscountRule& rule, Money spend) noexcept {
  return spend >= rule.threshold ? rule.discount : 0;
}

// Cheapest offer price of a book. Throws DanglingIndex for unknown books.
Money min_price(const Instance& instance, BookIndex book);

// Sum over books of min_price.
Money sum_of_min_prices(const Instance& instance);

// Cheapest shop for a book; ties go to the lower shop index.
ShopIndex cheapest_shop(const Instance& instance, BookIndex book);

/// Evaluates an assignment: per-shop spend, earned discounts and total cost.
/// Every shop contributes discount_earned(rule, spend), including shops
/// where nothing is bought (a zero threshold is always met).
/// Throws OfferMissing if a book is mapped to a shop without an offer, and
/// DanglingIndex if the assignment does not cover exactly the instance books.
SolveResult evaluate_assignment(const Instance& instance,
                                const Assignment& assignment);

// Fixed-price check: all offers of each book share one price. Returns the
// first offending book, if any.
std::optional<BookIndex> first_non_fixed_price_book(const Instance& instance);

// Fixed price of a book (its single offer price). Precondition: fixed-price.
Money fixed_price(const Instance& instance, BookIndex book);

// First offer whose price is not 1, if any.
std::optional<Offer> first_non_unit_offer(const Instance& instance);

// Largest number of offers at a single shop.
std::size_t max_shop_degree(const Instance& instance);

}  // namespace clevershop

#endif  // CLEVERSHOP_INSTANCE_HPP
