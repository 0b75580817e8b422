#include "bsymb/tables.hpp"

#include <array>

namespace bsymb {

namespace {

MatGF from_rows(int rows, int cols, const uint32_t* data) {
  MatGF m = MatGF::zero(Field::of_order(2), rows, cols);
  std::copy_n(data, static_cast<size_t>(rows) * cols, m.a.begin());
  return m;
}

}  // namespace

MatGF pg22_reference(int n) {
  switch (n) {
    case 3: {
      static constexpr uint32_t d[] = {
          0, 1, 1,
          1, 1, 0,
          0, 0, 1,
      };
      return from_rows(3, 3, d);
    }
    case 4: {
      static constexpr uint32_t d[] = {
          0, 1, 1, 0,
          1, 1, 0, 0,
          0, 0, 1, 1,
      };
      return from_rows(3, 4, d);
    }
    case 5: {
      static constexpr uint32_t d[] = {
          0, 1, 1, 1, 0,
          1, 1, 0, 0, 1,
          0, 0, 1, 0, 1,
      };
      return from_rows(3, 5, d);
    }
    case 6: {
      static constexpr uint32_t d[] = {
          0, 1, 1, 1, 1, 0,
          1, 1, 0, 0, 1, 0,
          0, 0, 1, 0, 1, 1,
      };
      return from_rows(3, 6, d);
    }
    case 7: {
      static constexpr uint32_t d[] = {
          0, 1, 1, 1, 0, 0, 1,
          1, 1, 0, 0, 1, 0, 1,
          0, 0, 1, 0, 1, 1, 1,
      };
      return from_rows(3, 7, d);
    }
    default:
      fail(Errc::bad_params, "PG(2,2) reference configurations cover 3 <= n <= 7");
  }
}

MatGF pg32_reference(int n) {
  switch (n) {
    case 5: {
      static constexpr uint32_t d[] = {
          1, 1, 0, 1, 1,
          0, 0, 0, 1, 1,
          1, 0, 1, 0, 0,
          0, 0, 1, 1, 0,
      };
      return from_rows(4, 5, d);
    }
    case 7: {
      static constexpr uint32_t d[] = {
          0, 0, 0, 1, 0, 1, 1,
          1, 0, 0, 0, 1, 0, 0,
          0, 1, 0, 0, 0, 1, 0,
          0, 0, 1, 1, 1, 1, 0,
      };
      return from_rows(4, 7, d);
    }
    case 8: {
      static constexpr uint32_t d[] = {
          1, 1, 1, 0, 1, 0, 0, 0,
          0, 1, 0, 0, 1, 1, 0, 1,
          1, 0, 1, 1, 0, 1, 0, 0,
          1, 1, 0, 0, 0, 1, 1, 0,
      };
      return from_rows(4, 8, d);
    }
    case 10: {
      static constexpr uint32_t d[] = {
          1, 0, 1, 1, 0, 0, 1, 1, 1, 0,
          0, 1, 1, 1, 1, 0, 0, 1, 0, 1,
          0, 1, 0, 0, 0, 1, 1, 1, 1, 1,
          1, 0, 1, 0, 0, 1, 0, 1, 1, 1,
      };
      return from_rows(4, 10, d);
    }
    case 13: {
      static constexpr uint32_t d[] = {
          1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 0,
          1, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 0, 0,
          1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 1,
          0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 0, 1, 0,
      };
      return from_rows(4, 13, d);
    }
    case 15: {
      static constexpr uint32_t d[] = {
          0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 1, 1, 1, 1, 1,
          1, 0, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1,
          0, 1, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1, 1, 0, 0,
          0, 0, 1, 1, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0,
      };
      return from_rows(4, 15, d);
    }
    default:
      fail(Errc::bad_params, "PG(3,2) reference matrices cover n in {5,7,8,10,13,15}");
  }
}

}  // namespace bsymb
