#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "bnq.h"

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__,     \
              #cond, bnq_last_error());                           \
      return 1;                                                   \
    }                                                             \
  } while (0)

int main(void) {
  BnqRootDatum *d = NULL;
  EXPECT(bnq_root_datum_new(6, &d) == BNQ_STATUS_OK);
  uint32_t w[6] = {0, 0, 0, 0, 0, 1};
  BnqOrbit *o = NULL;
  EXPECT(bnq_orbit_new(d, w, 6, &o) == BNQ_STATUS_OK);
  EXPECT(bnq_orbit_len(o) == 64);
  bnq_orbit_free(o);
  bnq_root_datum_free(d);

  EXPECT(bnq_root_datum_new(99, &d) == BNQ_STATUS_RANK_OUT_OF_RANGE);
  EXPECT(strstr(bnq_last_error(), "99") != NULL);

  BnqPatchConfig cfg = bnq_patch_config_default(5, 4.0);
  BnqPattern *p = NULL;
  EXPECT(bnq_pattern_generate(&cfg, &p) == BNQ_STATUS_OK);
  size_t n = bnq_pattern_len(p);
  EXPECT(n > 0);
  double *par = malloc(2 * n * sizeof(double));
  EXPECT(bnq_pattern_par(p, par, 2 * n) == BNQ_STATUS_OK);
  free(par);
  char *svg = bnq_pattern_svg(p);
  EXPECT(svg != NULL && strstr(svg, "</svg>") != NULL);
  bnq_string_free(svg);
  bnq_pattern_free(p);

  printf("ok %s %zu\n", bnq_version(), n);
  return 0;
}
