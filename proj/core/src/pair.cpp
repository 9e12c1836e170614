#include "rsk/pair.hpp"

#include "rsk/errors.hpp"

namespace rsk {

TableauPair::TableauPair(Tableau p, Tableau q)
    : p_(std::move(p)), q_(std::move(q)) {
  if (!p_.is_standard() || !q_.is_standard()) {
    throw ContractError("tableau pair requires standard tableaux");
  }
  if (p_.shape() != q_.shape()) {
    throw ContractError("tableau pair requires equal shapes");
  }
}

Sign sign_from_tableaux(const TableauPair& pair) {
  return pair.p().sign() * pair.q().sign() *
         sign_of_parity(pair.shape().even_row_total());
}

long long second_row_sum(const TableauPair& pair) {
  if (pair.p().rows().size() > 2 || pair.q().rows().size() > 2) {
    throw ContractError("second-row sum requires tableaux with at most 2 rows");
  }
  long long sum = 0;
  for (const Tableau* t : {&pair.p(), &pair.q()}) {
    if (t->rows().size() == 2) {
      for (int v : t->rows()[1]) sum += v;
    }
  }
  return sum;
}

bool second_row_parity_matches(const TableauPair& pair) {
  const long long s = second_row_sum(pair);
  const long long inv = pair.p().inversions() + pair.q().inversions();
  return (s - inv) % 2 == 0;
}

}  // namespace rsk
