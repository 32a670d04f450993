package gamma ;

/** Generated class GammaC7. */
public class GammaC7 implements GammaSized {
    private int f0 = 0 ;
    private static int s0 = 0 ;
    public int shared = 1 ;

    public GammaC7 ( ) { }
    public int peek ( int q ) { return q + 1 ; }
    public int size ( int k ) { return k * 2 ; }

    protected void work0 ( ) {
        int v = 0 ;
        switch ( v ) {
        case 1 :
        v = v + 2 ;
        break ;
        default :
        v = 0 ;
        }
        while ( v < 10 ) {
        if ( v > 5 ) {
        v = v + 2 ;
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
    }

    /** Work item 1. */
    protected void work1 ( int p0 ) {
        int v = f0 ;
        for ( int i = 0 ; i < 3 ; i ++ ) {
        v = v + i ;
        }
        while ( v < 10 ) {
        if ( v > 5 ) {
        v = v + 2 ;
        }
        v = v + 1 ;
        }
        for ( int i = 0 ; i < 3 ; i ++ ) {
        v = v + i ;
        }
        f0 = v ;
    }

    protected void work2 ( int p0 , int p1 , int p2 ) {
        int v = f0 ;
        // keep going
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
}
