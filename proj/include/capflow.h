/* C interface to the capillary-flow laboratory.
 *
 * All entry points return a capflow_status; on failure the handle/output
 * arguments are left untouched and capflow_last_error() describes the
 * problem (thread-local). Status values double as process exit codes:
 * 1 invalid input, 2 numerical failure (blow-up, cone violation),
 * 3 violated mathematical property.
 */
#ifndef CAPFLOW_H
#define CAPFLOW_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    CAPFLOW_OK = 0,
    CAPFLOW_ERR_INVALID = 1,
    CAPFLOW_ERR_NUMERIC = 2,
    CAPFLOW_ERR_PROPERTY = 3
} capflow_status;

typedef struct capflow_curve capflow_curve;
typedef struct capflow_fk_table capflow_fk_table;

const char* capflow_last_error(void);

/* ---- curve construction and access ---- */

capflow_status capflow_make_cap(int n, double theta, double R, int M,
                                capflow_curve** out);
capflow_status capflow_make_flat_ball(int n, double theta, int M,
                                      capflow_curve** out);
/* strict_out (optional) reports strict horocap-convexity of the result. */
capflow_status capflow_make_perturbed_cap(int n, double theta, double R, int mode,
                                          double eps, int M, int* strict_out,
                                          capflow_curve** out);
capflow_status capflow_curve_from_arrays(int n, double theta, const double* r,
                                         const double* z, int count,
                                         capflow_curve** out);
void capflow_curve_free(capflow_curve* c);

int capflow_curve_nodes(const capflow_curve* c); /* M+1 */
int capflow_curve_dim(const capflow_curve* c);
double capflow_curve_theta(const capflow_curve* c);
/* r and z must each hold capflow_curve_nodes(c) doubles. */
void capflow_curve_data(const capflow_curve* c, double* r, double* z);

/* ---- evaluators ---- */

capflow_status capflow_validate(const capflow_curve* c, int* ok);
capflow_status capflow_contact_angle(const capflow_curve* c, double* out);
/* W must hold n+2 doubles. */
capflow_status capflow_quermass(const capflow_curve* c, double* W);
capflow_status capflow_horocap(const capflow_curve* c, double* min_rho,
                               double* min_height_slack, int* strict);
capflow_status capflow_support_check(const capflow_curve* c, double* out);
capflow_status capflow_cap_horocap_residual(double theta, double R, double gamma,
                                            double* out);
capflow_status capflow_hausdorff_to_cap(const capflow_curve* c, double* R_best,
                                        double* dist);
capflow_status capflow_hsiung_minkowski(const capflow_curve* c, int k, double* out);
capflow_status capflow_heintze_karcher(const capflow_curve* c, double* out);
/* f holds one speed value per node. */
capflow_status capflow_variation_check(const capflow_curve* c, const double* f,
                                       int k, double delta, double* out);
/* Largest strictly horocap-convex perturbation amplitude (bisected). */
capflow_status capflow_eps_star(int n, double theta, double R, int mode, int M,
                                double* out);

/* ---- flow ---- */

typedef struct {
    int kind; /* 0 = constrained quotient flow, 1 = mean curvature flow */
    int k;
    double cfl;
    double dt_max;
    double t_end;
    int resample_every;
    int diagnostics_every;
    double tol_stationary;
    int stop_on_stationary;
} capflow_flow_config;

void capflow_flow_config_default(capflow_flow_config* cfg);

typedef struct {
    double t;
    double W[8]; /* W_0 .. W_{n+1}; dimensions up to n = 6 */
    double min_rho;
    double min_height_slack;
    double minF;
    double maxKappa;
    double angle_defect;
    double cap_dist;
    double speed_sup;
} capflow_record;

typedef void (*capflow_record_cb)(const capflow_record* rec, void* user);
typedef void (*capflow_snapshot_cb)(const capflow_curve* curve, double t, void* user);

capflow_status capflow_flow_run(const capflow_curve* init,
                                const capflow_flow_config* cfg,
                                capflow_record_cb rec_cb,
                                capflow_snapshot_cb snap_cb, void* user,
                                capflow_curve** final_out);

/* ---- equality tables ---- */

capflow_status capflow_fk_build(int n, double theta, int k, int samples,
                                double Rmin, double Rmax, capflow_fk_table** out);
void capflow_fk_free(capflow_fk_table* t);
int capflow_fk_rows(const capflow_fk_table* t);
/* Last row is the flat-disk limit; its R is +inf. */
void capflow_fk_row(const capflow_fk_table* t, int i, double* R, double* Wkm1,
                    double* Wk);
capflow_status capflow_fk_margin(const capflow_fk_table* t, const capflow_curve* c,
                                 double* out);

#ifdef __cplusplus
}
#endif

#endif /* CAPFLOW_H */
