package beta ;

/** Generated class BetaC6. */
public class BetaC6 {
    private int f0 = 0 ;
    private static int s0 = 0 ;
    public int shared = 1 ;

    public BetaC6 ( ) { }
    public int getF0 ( ) { return f0 ; }
    public void setF0 ( int v ) { this . f0 = v ; }
    public int peek ( int q ) { return q + 1 ; }
    static int twice ( int t ) { return t * s0 ; }

    public void work0 ( int p0 , int p1 , int p2 ) {
        int v = 0 ;
        while ( v < 10 ) {
        if ( v > 5 ) {
        v = v + 2 ;
        }
        v = v + 1 ;
        }
        for ( int i = 0 ; i < 3 ; i ++ ) {
        v = v + i ;
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
        if ( v > 0 || v == 7 ) {
        v = v + 1 ;
        }
    }

    private void work1 ( int p0 , int p1 , int p2 ) {
        int v = f0 ;
        // keep going
        v = v > 2 ? v : 2 ;
        f0 = v ;
    }

    private void work2 ( int p0 , int p1 ) {
        int v = f0 ;
        // keep going
        v = v > 2 ? v : 2 ;
        while ( v < 10 ) {
        if ( v > 5 ) {
        v = v + 2 ;
        }
        v = v + 1 ;
        }
        f0 = v ;
    }

    /** Work item 3. */
    protected void work3 ( ) {
        int v = f0 ;
        // keep going
        for ( int i = 0 ; i < 3 ; i ++ ) {
        v = v + i ;
        }
        v = v > 2 ? v : 2 ;
        switch ( v ) {
        case 1 :
        v = v + 2 ;
        break ;
        case 2 :
        v = v + 3 ;
        break ;
        default :
        v = 0 ;
        }
        v = v > 2 ? v : 2 ;
        f0 = v ;
    }
}
