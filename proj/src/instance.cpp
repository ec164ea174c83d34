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

#include "clevershop/instance.hpp"

#include <algorithm>
#include <string>

#include "clevershop/error.hpp"

namespace clevershop {

namespace {

std::string book_label(BookIndex b) { return "b" + std::to_string(b + 1); }
std::string shop_label(ShopIndex s) { return "s" + std::to_string(s + 1); }

}  // namespace

Instance validate_instance(InstanceData raw) {
  const std::size_t n = raw.book_count;
  const std::size_t m = raw.shops.size();

  if (!raw.book_names.empty() && raw.book_names.size() != n) {
    throw Error(ErrorCode::DanglingIndex,
                "book names: " + std::to_string(raw.book_names.size()) +
                    " names for " + std::to_string(n) + " books");
  }
  for (const Offer& o : raw.offers) {
    if (o.book >= n) {
      throw Error(ErrorCode::DanglingIndex, "book index " + std::to_string(o.book));
    }
    if (o.shop >= m) {
      throw Error(ErrorCode::DanglingIndex, "shop index " + std::to_string(o.shop));
    }
  }
  for (std::size_t s = 0; s < m; ++s) {
    if (raw.shops[s].discount < 0) {
      throw Error(ErrorCode::NegativeValue, "discount of " + shop_label(s));
    }
    if (raw.shops[s].threshold < 0) {
      throw Error(ErrorCode::NegativeValue, "threshold of " + shop_label(s));
    }
  }
  for (const Offer& o : raw.offers) {
    if (o.price < 0) {
      throw Error(ErrorCode::NegativeValue,
                  "price of " + book_label(o.book) + " at " + shop_label(o.shop));
    }
  }
  if (raw.budget && *raw.budget < 0) {
    throw Error(ErrorCode::NegativeValue, "budget");
  }

  std::stable_sort(raw.offers.begin(), raw.offers.end(),
                   [](const Offer& a, const Offer& b) {
                     return a.book != b.book ? a.book < b.book : a.shop < b.shop;
                   });
  for (std::size_t i = 1; i < raw.offers.size(); ++i) {
    if (raw.offers[i].book == raw.offers[i - 1].book &&
        raw.offers[i].shop == raw.offers[i - 1].shop) {
      throw Error(ErrorCode::DuplicateOffer,
                  "(" + book_label(raw.offers[i].book) + ", " +
                      shop_label(raw.offers[i].shop) + ")");
    }
  }

  Instance inst;
  inst.book_count_ = n;
  inst.book_begin_.assign(n + 1, 0);
  for (const Offer& o : raw.offers) ++inst.book_begin_[o.book + 1];
  for (std::size_t b = 0; b < n; ++b) {
    if (inst.book_begin_[b + 1] == 0) {
      throw Error(ErrorCode::BookUncovered, book_label(b));
    }
    inst.book_begin_[b + 1] += inst.book_begin_[b];
  }

  inst.by_shop_.resize(m);
  for (const Offer& o : raw.offers) {
    inst.by_shop_[o.shop].push_back(o);
    inst.total_offer_value_ += o.price;
  }
  inst.book_names_ = std::move(raw.book_names);
  inst.rules_ = std::move(raw.shops);
  inst.offers_ = std::move(raw.offers);
  inst.budget_ = raw.budget;
  return inst;
}

std::span<const Offer> Instance::offers_of_book(BookIndex book) const {
  if (book >= book_count_) {
    throw Error(ErrorCode::DanglingIndex, "book index " + std::to_string(book));
  }
  return std::span<const Offer>(offers_).subspan(
      book_begin_[book], book_begin_[book + 1] - book_begin_[book]);
}

std::span<const Offer> Instance::offers_of_shop(ShopIndex shop) const {
  if (shop >= by_shop_.size()) {
    throw Error(ErrorCode::DanglingIndex, "shop index " + std::to_string(shop));
  }
  return by_shop_[shop];
}

std::optional<Money> Instance::price(BookIndex book, ShopIndex shop) const {
  for (const Offer& o : offers_of_book(book)) {
    if (o.shop == shop) return o.price;
  }
  return std::nullopt;
}

const std::string& Instance::book_name(BookIndex book) const {
  static const std::string kEmpty;
  if (book >= book_count_) {
    throw Error(ErrorCode::DanglingIndex, "book index " + std::to_string(book));
  }
  return book_names_.empty() ? kEmpty : book_names_[book];
}

Instance Instance::with_budget(std::optional<Money> budget) const {
  InstanceData data = to_data();
  data.budget = budget;
  return validate_instance(std::move(data));
}

InstanceData Instance::to_data() const {
  InstanceData data;
  data.book_count = book_count_;
  data.book_names = book_names_;
  data.shops = rules_;
  data.offers = offers_;
  data.budget = budget_;
  return data;
}

Money min_price(const Instance& instance, BookIndex book) {
  Money best = 0;
  bool first = true;
  for (const Offer& o : instance.offers_of_book(book)) {
    if (first || o.price < best) best = o.price;
    first = false;
  }
  return best;
}

Money sum_of_min_prices(const Instance& instance) {
  Money total = 0;
  for (BookIndex b = 0; b < instance.book_count(); ++b) total += min_price(instance, b);
  return total;
}

ShopIndex cheapest_shop(const Instance& instance, BookIndex book) {
  auto offers = instance.offers_of_book(book);
  // offers are sorted by shop, so min_element keeps the lowest index on ties
  return std::min_element(offers.begin(), offers.end(),
                          [](const Offer& a, const Offer& b) { return a.price < b.price; })
      ->shop;
}

SolveResult evaluate_assignment(const Instance& instance, const Assignment& assignment) {
  if (assignment.choice.size() != instance.book_count()) {
    throw Error(ErrorCode::DanglingIndex,
                "assignment covers " + std::to_string(assignment.choice.size()) +
                    " books, instance has " + std::to_string(instance.book_count()));
  }
  SolveResult result;
  result.assignment = assignment;
  result.per_shop_spend.assign(instance.shop_count(), 0);
  Money gross = 0;
  for (BookIndex b = 0; b < instance.book_count(); ++b) {
    const ShopIndex s = assignment.choice[b];
    const auto price = s < instance.shop_count() ? instance.price(b, s) : std::nullopt;
    if (!price) {
      throw Error(ErrorCode::OfferMissing, "(" + book_label(b) + ", " + shop_label(s) + ")");
    }
    result.per_shop_spend[s] += *price;
    gross += *price;
  }
  for (ShopIndex s = 0; s < instance.shop_count(); ++s) {
    result.total_discount += discount_earned(instance.rule(s), result.per_shop_spend[s]);
  }
  result.total_cost = gross - result.total_discount;
  return result;
}

std::optional<BookIndex> first_non_fixed_price_book(const Instance& instance) {
  for (BookIndex b = 0; b < instance.book_count(); ++b) {
    auto offers = instance.offers_of_book(b);
    for (const Offer& o : offers) {
      if (o.price != offers.front().price) return b;
    }
  }
  return std::nullopt;
}

Money fixed_price(const Instance& instance, BookIndex book) {
  return instance.offers_of_book(book).front().price;
}

std::optional<Offer> first_non_unit_offer(const Instance& instance) {
  for (const Offer& o : instance.offers()) {
    if (o.price != 1) return o;
  }
  return std::nullopt;
}

std::size_t max_shop_degree(const Instance& instance) {
  std::size_t best = 0;
  for (ShopIndex s = 0; s < instance.shop_count(); ++s) {
    best = std::max(best, instance.offers_of_shop(s).size());
  }
  return best;
}

}  // namespace clevershop
