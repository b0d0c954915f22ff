/* Minimal libgap runner: evaluates the GAP file named on the command line.
 * Build against a libgap shared library (e.g. the one shipped in the
 * passagemath-gap wheel):
 *   cc driver.c -o driver -L$LIBDIR -lgap -Wl,-rpath,$LIBDIR
 * and run with GAP_ROOT pointing at a GAP root containing pkg/smallgrp.
 */
#include <stdio.h>
#include <stdlib.h>

typedef void *Obj;
typedef void (*GAP_CallbackFunc)(void);
extern void GAP_Initialize(int argc, char **argv, GAP_CallbackFunc markBagsCallback,
                           GAP_CallbackFunc errorCallback, int handleSignals);
extern Obj GAP_EvalString(const char *cmd);

static void err(void) { fprintf(stderr, "gap error\n"); }

int main(int argc, char **argv) {
    if (argc < 2) {
        fprintf(stderr, "usage: %s script.g\n", argv[0]);
        return 2;
    }
    char *root = getenv("GAP_ROOT");
    char *a[] = {"gap", "-l", root ? root : ".", "-q", "-A", "--nointeract", NULL};
    GAP_Initialize(6, a, NULL, err, 1);
    FILE *f = fopen(argv[1], "r");
    if (!f) {
        perror(argv[1]);
        return 2;
    }
    static char buf[1 << 20];
    size_t n = fread(buf, 1, sizeof(buf) - 1, f);
    buf[n] = 0;
    GAP_EvalString(buf);
    return 0;
}
