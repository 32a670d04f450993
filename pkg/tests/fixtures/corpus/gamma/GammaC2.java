package gamma ;

/** Generated class GammaC2. */
public class GammaC2 {
    private int f0 = 0 ;
    private static int s0 = 0 ;
    private static int s1 = 1 ;
    public int shared = 1 ;

    public int getF0 ( ) { return f0 ; }
    public int peek ( int q ) { return q + 1 ; }
    static int twice ( int t ) { return t * s0 ; }

    /** Work item 0. */
    public void work0 ( ) {
        int v = f0 ;
        while ( v < 10 ) {
        if ( v > 5 ) {
        v = v + 2 ;
        }
        v = v + 1 ;
        }
        v = v > 2 ? v : 2 ;
        f0 = v ;
    }

    /** Work item 1. */
    void work1 ( ) {
        int v = f0 ;
        // keep going
        if ( v > 0 && v > 1 ) {
        v = v + 1 ;
        }
        v = v > 2 ? v : 2 ;
        if ( v > 0 || v == 7 ) {
        v = v + 1 ;
        }
        f0 = v ;
    }

    private void work2 ( int p0 , int p1 ) {
        int v = f0 ;
        while ( v < 100 ) {
        if ( v > 50 ) {
        break ;
        }
        v = v + 2 ;
        if ( v > 40 ) {
        continue ;
        }
        v = v + 1 ;
        }
        while ( v < 100 ) {
        if ( v > 50 ) {
        break ;
        }
        v = v + 2 ;
        if ( v > 40 ) {
        continue ;
        }
        v = v + 1 ;
        }
        f0 = v ;
    }

    private void work3 ( ) {
        int v = f0 ;
        // keep going
        f0 = v ;
    }
}
