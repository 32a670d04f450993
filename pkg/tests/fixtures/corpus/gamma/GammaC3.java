package gamma ;

/** Generated class GammaC3. */
public class GammaC3 extends GammaBase implements GammaSized {
    private int f0 = 0 ;
    private int f1 = 1 ;
    private int f2 = 2 ;
    private static int s0 = 0 ;
    public int shared = 1 ;
    private GammaC1 helper = new GammaC1 ( ) ;

    public GammaC3 ( ) { }
    public void setF1 ( int v ) { this . f1 = v ; }
    public int getF2 ( ) { return f2 ; }
    public void setF2 ( int v ) { this . f2 = v ; }
    public int peek ( int q ) { return q + 1 ; }
    public int size ( int k ) { return k * 2 ; }
    public int area ( int s ) { return s * s ; }

    /** Work item 0. */
    protected void work0 ( int p0 ) {
        int v = f1 ;
        // keep going
        switch ( v ) {
        case 1 :
        v = v + 2 ;
        break ;
        case 2 :
        v = v + 3 ;
        break ;
        case 3 :
        v = v + 4 ;
        break ;
        default :
        v = 0 ;
        }
        if ( v > 0 && v > 1 && v > 2 ) {
        v = v + 1 ;
        }
        v = v > 2 ? v : 2 ;
        v = v + helper . shared ;
        f1 = v ;
    }

    /** Work item 1. */
    private void work1 ( int p0 ) {
        int v = 0 ;
        // keep going
        v = v + helper . shared ;
    }

    /** Work item 2. */
    void work2 ( int p0 , int p1 , int p2 ) {
        int v = f0 ;
        // keep going
        v = v + helper . peek ( v ) ;
        v = v > 2 ? v : 2 ;
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
        f0 = v ;
    }
}

/** Generated class GammaC4. */
class GammaC4 extends GammaC1 implements GammaSized {
    private int f0 = 0 ;
    private int f1 = 1 ;
    private static int s0 = 0 ;
    public int shared = 1 ;

    public GammaC4 ( ) { }
    public void setF0 ( int v ) { this . f0 = v ; }
    public int getF1 ( ) { return f1 ; }
    public void setF1 ( int v ) { this . f1 = v ; }
    public int peek ( int q ) { return q + 1 ; }
    public int size ( int k ) { return k * 2 ; }
    public int area ( int s ) { return s * s ; }
    static int twice ( int t ) { return t * s0 ; }

    private void work0 ( ) {
        int v = f0 ;
        // keep going
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
        if ( v > 0 && v > 1 && v > 2 || v == 7 ) {
        v = v + 1 ;
        }
        f0 = v ;
    }

    void work1 ( int p0 ) {
        int v = 0 ;
        if ( v > 0 && v > 1 ) {
        v = v + 1 ;
        }
        if ( v > 0 ) {
        v = v + 1 ;
        }
    }
}
