/* Compiles as plain C against the public header and exercises the main
 * entry points; keeps the extern-C surface honest. */

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "hawkdove/hawkdove.h"

int main(void) {
  hdq_game* game = NULL;
  if (hdq_game_create(50.0, 100.0, 10.0, &game) != HDQ_OK) return 1;

  hdq_outcome outcome;
  if (hdq_play(game, 0.0, 1.5707963267948966, 0.0, 1.5707963267948966,
               0.7853981633974483, &outcome) != HDQ_OK)
    return 2;
  if (fabs(outcome.payoff_row - 15.0) > 1e-9) return 3;

  double gamma_c = 0.0;
  if (hdq_critical_gamma(game, &gamma_c) != HDQ_OK) return 4;
  if (!(gamma_c > 0.3926 && gamma_c < 0.7854)) return 5;

  hdq_classical_equilibrium eq;
  if (hdq_classical_mixed_ess(game, &eq) != HDQ_OK) return 6;
  if (fabs(eq.average_payoff - 6.25) > 1e-9) return 7;

  /* error paths: status code plus message */
  hdq_game* bad = NULL;
  if (hdq_game_create(50.0, 40.0, 10.0, &bad) != HDQ_ERROR_INVALID_ARGUMENT)
    return 8;
  if (strstr(hdq_last_error(), "v < i") == NULL) return 9;

  hdq_game_destroy(game);
  printf("c header check: ok (gamma_c=%.6f)\n", gamma_c);
  return 0;
}
