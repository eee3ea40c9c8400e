/* Minimal demonstration of the C API: run a suite and inspect the counts.
 *
 * Build (after `cargo build --release -p loopn-capi`):
 *   cc demo.c -I crates/capi/include -L target/release -lloopn_capi -lm -o demo
 */
#include <stdio.h>
#include "loopn.h"

int main(void) {
    printf("loopn %s\n", loopn_version());
    LoopnReport *report = NULL;
    LoopnStatus st = loopn_run_suite("presentation", 2, 3, 0, false, 7, &report);
    if (st != LOOPN_STATUS_OK && st != LOOPN_STATUS_FAILED_CHECKS) {
        fprintf(stderr, "suite failed to run: %d\n", (int)st);
        return 2;
    }
    printf("pass=%llu fail=%llu skipped=%llu\n",
           (unsigned long long)loopn_report_pass_count(report),
           (unsigned long long)loopn_report_fail_count(report),
           (unsigned long long)loopn_report_skip_count(report));
    loopn_report_free(report);

    LoopnElement *e = NULL, *f = NULL, *c = NULL;
    loopn_element_parse("(1) * E", &e);
    loopn_element_parse("(1) * F", &f);
    loopn_element_commutator(e, f, &c);
    char *s = loopn_element_print(c);
    printf("[E, F] = %s\n", s);
    loopn_string_free(s);
    loopn_element_free(e);
    loopn_element_free(f);
    loopn_element_free(c);
    return st == LOOPN_STATUS_OK ? 0 : 1;
}
