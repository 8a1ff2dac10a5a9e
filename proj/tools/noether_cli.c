/* Command line front end. Everything lives behind the shared library's C
 * API; this file only shuttles argv in and the report out. Reports go to
 * stdout, diagnostics to stderr, and the exit code follows the convention
 * 0 = success, 1 = mathematical negative, 2 = usage error, 3 = resource
 * bound, 4 = internal error. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "noether.h"

int main(int argc, char** argv) {
  noe_run* run = NULL;
  noe_status st;
  int code;

  if (argc < 2) {
    fprintf(stderr, "usage: noether <subcommand> [options]; try 'noether --help'\n");
    return 2;
  }

  st = noe_run_argv(argc - 1, (const char* const*)(argv + 1), &run);
  if (st != NOE_OK) {
    fprintf(stderr, "noether: %s\n", noe_last_error());
    return 4;
  }

  const char* report = noe_run_report_json(run);
  const char* diag = noe_run_diagnostics(run);
  const char* out_path = noe_run_out_path(run);

  if (report && report[0] != '\0') {
    fputs(report, stdout);
    if (out_path) {
      FILE* f = fopen(out_path, "wb");
      if (!f) {
        fprintf(stderr, "noether: cannot write '%s'\n", out_path);
        noe_run_free(run);
        return 2;
      }
      fputs(report, f);
      fclose(f);
    }
  }
  if (diag && diag[0] != '\0') fprintf(stderr, "%s\n", diag);

  code = noe_run_exit_code(run);
  noe_run_free(run);
  return code;
}
